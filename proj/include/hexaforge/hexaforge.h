/* hexaforge — exact construction, enumeration, verification and geometric
 * realization of perfect hexahedra (six-sided solids with integer edges,
 * face diagonals and space diagonals).
 *
 * All numeric values cross this API as decimal strings; rationals use the
 * form "num" or "num/den".  Strings returned through char** are allocated
 * by the library and must be released with hexaforge_string_free().
 * Handles are opaque; each has a matching *_free().  Pointers returned by
 * hexaforge_list_solution() are borrowed from the list and must not be
 * freed.  Handles are immutable after creation and safe to read from any
 * number of threads.
 */
#ifndef HEXAFORGE_H
#define HEXAFORGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hexaforge_status {
  HEXAFORGE_OK = 0,
  HEXAFORGE_E_ARGUMENT = 1,        /* malformed or out-of-domain input */
  HEXAFORGE_E_NOT_A_SOLUTION = 2,  /* the defining equations fail */
  HEXAFORGE_E_MISMATCH = 3,        /* parameter compatibility equation fails */
  HEXAFORGE_E_NOT_EMBEDDABLE = 4,  /* h^2 <= 0 */
  HEXAFORGE_E_AT_INFINITY = 5,     /* chord meets the surface only at infinity */
  HEXAFORGE_E_DEGENERATE_FACE = 6, /* 4d^2 <= (a+b)^2 */
  HEXAFORGE_E_INTERNAL = 7
} hexaforge_status;

/* Exit-code class of a status: 0 success, 1 domain failure, 2 usage error. */
int hexaforge_status_class(hexaforge_status st);
const char* hexaforge_status_name(hexaforge_status st);

/* Message of the most recent failure on the calling thread; valid until the
 * next failing call on the same thread. */
const char* hexaforge_last_error(void);

const char* hexaforge_version(void);

void hexaforge_string_free(char* s);

typedef struct hexaforge_solution hexaforge_solution;
typedef struct hexaforge_report hexaforge_report;
typedef struct hexaforge_list hexaforge_list;
typedef struct hexaforge_family_record hexaforge_family_record;
typedef struct hexaforge_chord_result hexaforge_chord_result;
typedef struct hexaforge_embedding hexaforge_embedding;
typedef struct hexaforge_mesh hexaforge_mesh;
typedef struct hexaforge_radical hexaforge_radical;
typedef struct hexaforge_table hexaforge_table;

/* ---- verification and solutions -------------------------------------- */

/* Checks the three defining equations on the sextuple as given (no
 * reordering).  Returns HEXAFORGE_OK with a report either way; the report
 * says whether the equations hold and lists each failing one. */
hexaforge_status hexaforge_verify(const char* a, const char* b, const char* c,
                                  const char* d, const char* e, const char* f,
                                  hexaforge_report** out);

int hexaforge_report_valid(const hexaforge_report* rep);
size_t hexaforge_report_check_count(const hexaforge_report* rep);
/* i-th check: equation text, computed and expected values, pass flag. */
hexaforge_status hexaforge_report_check(const hexaforge_report* rep, size_t i,
                                        char** equation, char** lhs, char** rhs,
                                        int* ok);
void hexaforge_report_free(hexaforge_report* rep);

/* Canonicalizes (sorts a<b, e<f) and verifies; fails with
 * HEXAFORGE_E_NOT_A_SOLUTION when the equations do not hold. */
hexaforge_status hexaforge_solution_create(const char* a, const char* b,
                                           const char* c, const char* d,
                                           const char* e, const char* f,
                                           hexaforge_solution** out);
/* field is one of 'a','b','c','d','e','f'. */
hexaforge_status hexaforge_solution_field(const hexaforge_solution* sol,
                                          char field, char** out);
hexaforge_status hexaforge_solution_size(const hexaforge_solution* sol, char** out);
/* Divisibility sub-claims: 3 | ab, 4 | ab, 5 | ab, and 60 | size. */
hexaforge_status hexaforge_solution_divisibility(const hexaforge_solution* sol,
                                                 int* ab_by3, int* ab_by4,
                                                 int* ab_by5, int* size_by60);
hexaforge_status hexaforge_solution_primitive(const hexaforge_solution* sol,
                                              hexaforge_solution** reduced,
                                              char** scale);
hexaforge_status hexaforge_solution_similar(const hexaforge_solution* s1,
                                            const hexaforge_solution* s2,
                                            int* out);
void hexaforge_solution_free(hexaforge_solution* sol);

/* ---- enumeration ------------------------------------------------------ */

/* All canonical solutions with size <= max_size, ordered by (size, then
 * lexicographic sextuple).  workers > 1 shards size buckets across threads;
 * the output is identical for any worker count. */
hexaforge_status hexaforge_enumerate(const char* max_size, unsigned workers,
                                     hexaforge_list** out);

size_t hexaforge_list_count(const hexaforge_list* list);
/* Borrowed pointer, valid while the list lives. */
const hexaforge_solution* hexaforge_list_solution(const hexaforge_list* list,
                                                  size_t i);
hexaforge_status hexaforge_list_size_of(const hexaforge_list* list, size_t i,
                                        char** out);
size_t hexaforge_list_provenance_count(const hexaforge_list* list, size_t i);
/* k-th generating parameter pair of the i-th solution. */
hexaforge_status hexaforge_list_provenance(const hexaforge_list* list, size_t i,
                                           size_t k, char** r, char** s,
                                           char** lambda, char** p, char** q,
                                           char** mu);
void hexaforge_list_free(hexaforge_list* list);

/* ---- closed-form family ----------------------------------------------- */

hexaforge_status hexaforge_family(const char* n, hexaforge_family_record** out);
/* Raw formula values before canonicalization. */
hexaforge_status hexaforge_family_raw(const hexaforge_family_record* rec,
                                      char field, char** out);
const hexaforge_solution* hexaforge_family_solution(const hexaforge_family_record* rec);
hexaforge_status hexaforge_family_h_squared(const hexaforge_family_record* rec,
                                            char** out);
/* Generating parameters on curve (2): (r,s,lambda) and (p,q,mu). */
hexaforge_status hexaforge_family_params(const hexaforge_family_record* rec,
                                         char** r, char** s, char** lambda,
                                         char** p, char** q, char** mu);
void hexaforge_family_record_free(hexaforge_family_record* rec);

/* ---- chord construction ------------------------------------------------ */

/* Third intersection of the line through (p1x,p1y), (p2x,p2y) in the slice
 * q = q0, s = s0.  Fails with HEXAFORGE_E_AT_INFINITY when the line meets
 * the surface again only at infinity and HEXAFORGE_E_ARGUMENT for equal or
 * off-surface endpoints. */
hexaforge_status hexaforge_chord(const char* q0, const char* s0,
                                 const char* p1x, const char* p1y,
                                 const char* p2x, const char* p2y,
                                 hexaforge_chord_result** out);
hexaforge_status hexaforge_chord_point(const hexaforge_chord_result* res,
                                       char** x, char** y);
/* Integer surface point (p,q,r,s) after clearing denominators. */
hexaforge_status hexaforge_chord_cleared(const hexaforge_chord_result* res,
                                         char** p, char** q, char** r, char** s);
/* 1 when the cleared point yields a nondegenerate solution. */
int hexaforge_chord_has_solution(const hexaforge_chord_result* res);
const hexaforge_solution* hexaforge_chord_solution(const hexaforge_chord_result* res);
void hexaforge_chord_result_free(hexaforge_chord_result* res);

/* ---- embedding, metrics, area, mesh ------------------------------------ */

/* d^2 - (a^2+b^2)/2 as an exact rational.  Returns HEXAFORGE_OK when
 * positive and HEXAFORGE_E_NOT_EMBEDDABLE when <= 0; *out carries the value
 * in both cases. */
hexaforge_status hexaforge_height_squared(const hexaforge_solution* sol, char** out);

hexaforge_status hexaforge_embed(const hexaforge_solution* sol,
                                 hexaforge_embedding** out);
hexaforge_status hexaforge_embedding_h_squared(const hexaforge_embedding* emb,
                                               char** out);
size_t hexaforge_embedding_vertex_count(const hexaforge_embedding* emb);
/* Exact planar coordinates; level 1 means z = sqrt(h^2). */
hexaforge_status hexaforge_embedding_vertex(const hexaforge_embedding* emb,
                                            size_t i, char** x, char** y,
                                            int* level);
size_t hexaforge_embedding_face_count(const hexaforge_embedding* emb);
hexaforge_status hexaforge_embedding_face(const hexaforge_embedding* emb,
                                          size_t i, int idx[4]);
/* Recomputes all squared lengths and trapezoid planarity exactly. */
hexaforge_status hexaforge_embedding_verify(const hexaforge_embedding* emb,
                                            hexaforge_report** out);
void hexaforge_embedding_free(hexaforge_embedding* emb);

hexaforge_status hexaforge_mesh_create(const hexaforge_embedding* emb, int digits,
                                       hexaforge_mesh** out);
hexaforge_status hexaforge_mesh_vertex(const hexaforge_mesh* mesh, size_t i,
                                       char** x, char** y, char** z);
hexaforge_status hexaforge_mesh_face(const hexaforge_mesh* mesh, size_t i,
                                     int idx[4]);
void hexaforge_mesh_free(hexaforge_mesh* mesh);

/* Exact surface area 2ab + (a+b) sqrt(4d^2-(a+b)^2) as u + v sqrt(w). */
hexaforge_status hexaforge_surface_area(const hexaforge_solution* sol,
                                        hexaforge_radical** out);
hexaforge_status hexaforge_radical_parts(const hexaforge_radical* rad,
                                         char** rational_part, char** coefficient,
                                         char** radicand);
hexaforge_status hexaforge_radical_decimal(const hexaforge_radical* rad,
                                           int digits, char** out);
void hexaforge_radical_free(hexaforge_radical* rad);

/* ---- sampling tables for plots ----------------------------------------- */

/* Exact samples of the dehomogenized curve: columns t, x, y, z. */
hexaforge_status hexaforge_plot_curve3d(const char* t_from, const char* t_to,
                                        const char* step, hexaforge_table** out);
/* Projection into the x-z plane: columns t, x, z, residual; the residual of
 * the projected quartic is identically zero. */
hexaforge_status hexaforge_plot_projection(const char* t_from, const char* t_to,
                                           const char* step, hexaforge_table** out);
/* Affine surface grid: columns x, y, z, G with G = 2(x^2-y^2)xy - (z^2-1)z. */
hexaforge_status hexaforge_plot_surface(const char* from, const char* to,
                                        const char* step, hexaforge_table** out);

size_t hexaforge_table_rows(const hexaforge_table* table);
size_t hexaforge_table_cols(const hexaforge_table* table);
const char* hexaforge_table_col_name(const hexaforge_table* table, size_t j);
/* Exact rational cell value. */
hexaforge_status hexaforge_table_cell(const hexaforge_table* table, size_t i,
                                      size_t j, char** out);
void hexaforge_table_free(hexaforge_table* table);

/* ---- norm-equation parameterizations ------------------------------------ */

/* (scale(m^2-n^2), scale*2mn, scale(m^2+n^2)); fails for m = +-n. */
hexaforge_status hexaforge_pyth_from_params(const char* m, const char* n,
                                            const char* scale, char** x,
                                            char** y, char** z);
/* Multiplication by 1+i: (x,y,z) -> (x-y, x+y, z) on x^2+y^2 = z^2. */
hexaforge_status hexaforge_lift_to_twosquare(const char* x, const char* y,
                                             const char* z, char** ox,
                                             char** oy, char** oz);
/* Multiplication by (1-i)/2: inverse of the lift, back to x^2+y^2 = z^2. */
hexaforge_status hexaforge_project_to_pyth(const char* x, const char* y,
                                           const char* z, char** ox, char** oy,
                                           char** oz);

/* ---- misc --------------------------------------------------------------- */

/* Exact evaluation helpers. */
hexaforge_status hexaforge_quartic_form(const char* p, const char* q,
                                        const char* r, const char* s, char** out);
hexaforge_status hexaforge_curve_family(int id, const char* q, const char* s,
                                        char** out_p, char** out_q, char** out_r,
                                        char** out_s);
hexaforge_status hexaforge_projection_residual(const char* t, char** out);
hexaforge_status hexaforge_curve_point(const char* t, char** x, char** y, char** z);

/* Renders an exact rational to `digits` significant decimal digits. */
hexaforge_status hexaforge_format_decimal(const char* rational, int digits,
                                          char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEXAFORGE_H */
