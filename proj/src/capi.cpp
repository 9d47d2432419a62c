#include "hexaforge/hexaforge.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"
#include "geometry.hpp"
#include "surface.hpp"

using namespace hexaforge;

struct hexaforge_solution {
  HexaSolution v;
};

struct hexaforge_report {
  bool valid;
  struct Entry {
    std::string equation, lhs, rhs;
    bool ok;
  };
  std::vector<Entry> entries;
};

struct hexaforge_list {
  std::vector<hexaforge_solution> sols;
  std::vector<Int> sizes;
  std::vector<std::vector<Provenance>> provenance;
};

struct hexaforge_family_record {
  std::array<Int, 6> raw;
  hexaforge_solution sol;
  Int h_sq;
  Provenance params;
};

struct hexaforge_chord_result {
  Rat x, y;
  std::array<Int, 4> cleared;
  std::optional<hexaforge_solution> sol;
};

struct hexaforge_embedding {
  EmbeddedHexahedron v;
};

struct hexaforge_mesh {
  Mesh v;
};

struct hexaforge_radical {
  RadicalValue v;
};

struct hexaforge_table {
  std::vector<std::string> col_names;
  std::vector<std::vector<Rat>> rows;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hexaforge_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument: return HEXAFORGE_E_ARGUMENT;
    case ErrorKind::not_a_solution: return HEXAFORGE_E_NOT_A_SOLUTION;
    case ErrorKind::mismatch: return HEXAFORGE_E_MISMATCH;
    case ErrorKind::not_embeddable: return HEXAFORGE_E_NOT_EMBEDDABLE;
    case ErrorKind::at_infinity: return HEXAFORGE_E_AT_INFINITY;
    case ErrorKind::degenerate_face: return HEXAFORGE_E_DEGENERATE_FACE;
  }
  return HEXAFORGE_E_INTERNAL;
}

template <typename Fn>
hexaforge_status guarded(Fn&& fn) {
  try {
    fn();
    return HEXAFORGE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HEXAFORGE_E_INTERNAL;
  }
}

Int parse_positive_int(const char* text, const char* what) {
  if (text == nullptr)
    throw Error(ErrorKind::argument, std::string(what) + " is null");
  Int v = parse_int(text);
  if (v <= 0)
    throw Error(ErrorKind::argument, std::string(what) + " must be positive");
  return v;
}

Rat parse_rat_arg(const char* text, const char* what) {
  if (text == nullptr)
    throw Error(ErrorKind::argument, std::string(what) + " is null");
  return parse_rat(text);
}

hexaforge_report* make_report(const VerifyReport& rep) {
  auto* out = new hexaforge_report;
  out->valid = rep.valid;
  for (const auto& c : rep.checks)
    out->entries.push_back({c.equation, to_string(c.lhs), to_string(c.rhs), c.ok});
  return out;
}

hexaforge_report* make_report(const MetricsReport& rep) {
  auto* out = new hexaforge_report;
  out->valid = rep.valid;
  for (const auto& c : rep.checks)
    out->entries.push_back({c.name, to_string(c.got), to_string(c.want), c.ok});
  return out;
}

// inclusive rational range walk
std::vector<Rat> sample_range(const char* from, const char* to, const char* step) {
  Rat lo = parse_rat_arg(from, "range start");
  Rat hi = parse_rat_arg(to, "range end");
  Rat dt = parse_rat_arg(step, "step");
  if (dt <= 0) throw Error(ErrorKind::argument, "step must be positive");
  if (lo > hi) throw Error(ErrorKind::argument, "range start exceeds range end");
  Rat span = (hi - lo) / dt;
  if (span > 10'000'000)
    throw Error(ErrorKind::argument, "range produces too many samples");
  std::vector<Rat> out;
  for (Rat t = lo; t <= hi; t += dt) out.push_back(t);
  return out;
}

}  // namespace

extern "C" {

int hexaforge_status_class(hexaforge_status st) {
  switch (st) {
    case HEXAFORGE_OK: return 0;
    case HEXAFORGE_E_NOT_A_SOLUTION:
    case HEXAFORGE_E_MISMATCH:
    case HEXAFORGE_E_NOT_EMBEDDABLE:
    case HEXAFORGE_E_AT_INFINITY:
    case HEXAFORGE_E_DEGENERATE_FACE: return 1;
    default: return 2;
  }
}

const char* hexaforge_status_name(hexaforge_status st) {
  switch (st) {
    case HEXAFORGE_OK: return "ok";
    case HEXAFORGE_E_ARGUMENT: return "invalid argument";
    case HEXAFORGE_E_NOT_A_SOLUTION: return "not a solution";
    case HEXAFORGE_E_MISMATCH: return "compatibility mismatch";
    case HEXAFORGE_E_NOT_EMBEDDABLE: return "not embeddable";
    case HEXAFORGE_E_AT_INFINITY: return "at infinity";
    case HEXAFORGE_E_DEGENERATE_FACE: return "degenerate face";
    default: return "internal error";
  }
}

const char* hexaforge_last_error(void) { return g_last_error.c_str(); }

const char* hexaforge_version(void) { return "1.0.0"; }

void hexaforge_string_free(char* s) { std::free(s); }

/* ---- verification and solutions -------------------------------------- */

hexaforge_status hexaforge_verify(const char* a, const char* b, const char* c,
                                  const char* d, const char* e, const char* f,
                                  hexaforge_report** out) {
  return guarded([&] {
    VerifyReport rep = verify_solution(
        parse_positive_int(a, "a"), parse_positive_int(b, "b"),
        parse_positive_int(c, "c"), parse_positive_int(d, "d"),
        parse_positive_int(e, "e"), parse_positive_int(f, "f"));
    *out = make_report(rep);
  });
}

int hexaforge_report_valid(const hexaforge_report* rep) { return rep->valid ? 1 : 0; }

size_t hexaforge_report_check_count(const hexaforge_report* rep) {
  return rep->entries.size();
}

hexaforge_status hexaforge_report_check(const hexaforge_report* rep, size_t i,
                                        char** equation, char** lhs, char** rhs,
                                        int* ok) {
  return guarded([&] {
    if (i >= rep->entries.size())
      throw Error(ErrorKind::argument, "check index out of range");
    const auto& entry = rep->entries[i];
    if (equation) *equation = dup_string(entry.equation);
    if (lhs) *lhs = dup_string(entry.lhs);
    if (rhs) *rhs = dup_string(entry.rhs);
    if (ok) *ok = entry.ok ? 1 : 0;
  });
}

void hexaforge_report_free(hexaforge_report* rep) { delete rep; }

hexaforge_status hexaforge_solution_create(const char* a, const char* b,
                                           const char* c, const char* d,
                                           const char* e, const char* f,
                                           hexaforge_solution** out) {
  return guarded([&] {
    HexaSolution sol = canonicalize(
        parse_positive_int(a, "a"), parse_positive_int(b, "b"),
        parse_positive_int(c, "c"), parse_positive_int(d, "d"),
        parse_positive_int(e, "e"), parse_positive_int(f, "f"));
    *out = new hexaforge_solution{std::move(sol)};
  });
}

hexaforge_status hexaforge_solution_field(const hexaforge_solution* sol,
                                          char field, char** out) {
  return guarded([&] {
    const Int* v = nullptr;
    switch (field) {
      case 'a': v = &sol->v.a; break;
      case 'b': v = &sol->v.b; break;
      case 'c': v = &sol->v.c; break;
      case 'd': v = &sol->v.d; break;
      case 'e': v = &sol->v.e; break;
      case 'f': v = &sol->v.f; break;
      default: throw Error(ErrorKind::argument, "field must be one of a..f");
    }
    *out = dup_string(to_string(*v));
  });
}

hexaforge_status hexaforge_solution_size(const hexaforge_solution* sol, char** out) {
  return guarded([&] { *out = dup_string(to_string(size_of(sol->v))); });
}

hexaforge_status hexaforge_solution_divisibility(const hexaforge_solution* sol,
                                                 int* ab_by3, int* ab_by4,
                                                 int* ab_by5, int* size_by60) {
  return guarded([&] {
    DivisibilityReport rep = size_divisibility(sol->v);
    if (ab_by3) *ab_by3 = rep.ab_by3 ? 1 : 0;
    if (ab_by4) *ab_by4 = rep.ab_by4 ? 1 : 0;
    if (ab_by5) *ab_by5 = rep.ab_by5 ? 1 : 0;
    if (size_by60) *size_by60 = rep.size_by60 ? 1 : 0;
  });
}

hexaforge_status hexaforge_solution_primitive(const hexaforge_solution* sol,
                                              hexaforge_solution** reduced,
                                              char** scale) {
  return guarded([&] {
    auto [prim, g] = primitive_reduce(sol->v);
    *reduced = new hexaforge_solution{std::move(prim)};
    if (scale) *scale = dup_string(to_string(g));
  });
}

hexaforge_status hexaforge_solution_similar(const hexaforge_solution* s1,
                                            const hexaforge_solution* s2,
                                            int* out) {
  return guarded([&] { *out = similar(s1->v, s2->v) ? 1 : 0; });
}

void hexaforge_solution_free(hexaforge_solution* sol) { delete sol; }

/* ---- enumeration ------------------------------------------------------ */

hexaforge_status hexaforge_enumerate(const char* max_size, unsigned workers,
                                     hexaforge_list** out) {
  return guarded([&] {
    Int bound = parse_positive_int(max_size, "max_size");
    auto found = enumerate_solutions(bound, workers == 0 ? 1 : workers);
    auto* list = new hexaforge_list;
    for (auto& es : found) {
      list->sols.push_back({std::move(es.solution)});
      list->sizes.push_back(std::move(es.size));
      list->provenance.push_back(std::move(es.provenance));
    }
    *out = list;
  });
}

size_t hexaforge_list_count(const hexaforge_list* list) { return list->sols.size(); }

const hexaforge_solution* hexaforge_list_solution(const hexaforge_list* list,
                                                  size_t i) {
  return i < list->sols.size() ? &list->sols[i] : nullptr;
}

hexaforge_status hexaforge_list_size_of(const hexaforge_list* list, size_t i,
                                        char** out) {
  return guarded([&] {
    if (i >= list->sizes.size())
      throw Error(ErrorKind::argument, "solution index out of range");
    *out = dup_string(to_string(list->sizes[i]));
  });
}

size_t hexaforge_list_provenance_count(const hexaforge_list* list, size_t i) {
  return i < list->provenance.size() ? list->provenance[i].size() : 0;
}

hexaforge_status hexaforge_list_provenance(const hexaforge_list* list, size_t i,
                                           size_t k, char** r, char** s,
                                           char** lambda, char** p, char** q,
                                           char** mu) {
  return guarded([&] {
    if (i >= list->provenance.size() || k >= list->provenance[i].size())
      throw Error(ErrorKind::argument, "provenance index out of range");
    const Provenance& prov = list->provenance[i][k];
    if (r) *r = dup_string(to_string(prov.r));
    if (s) *s = dup_string(to_string(prov.s));
    if (lambda) *lambda = dup_string(to_string(prov.lambda));
    if (p) *p = dup_string(to_string(prov.p));
    if (q) *q = dup_string(to_string(prov.q));
    if (mu) *mu = dup_string(to_string(prov.mu));
  });
}

void hexaforge_list_free(hexaforge_list* list) { delete list; }

/* ---- closed-form family ----------------------------------------------- */

hexaforge_status hexaforge_family(const char* n, hexaforge_family_record** out) {
  return guarded([&] {
    Int idx = parse_positive_int(n, "n");
    auto rec = std::make_unique<hexaforge_family_record>();
    rec->raw = closed_form_family_raw(idx);
    rec->sol.v = closed_form_family(idx);
    rec->h_sq = family_height_squared(idx);
    // curve (2) at (q,s) = (n,1): r = 1-8n^4, s = 16n^4+1, p = -3n,
    // q = n(16n^4+1), lambda = mu = 1
    const Int n4 = sq(sq(idx));
    rec->params = {1 - 8 * n4, 16 * n4 + 1, 1, -3 * idx, idx * (16 * n4 + 1), 1};
    *out = rec.release();
  });
}

hexaforge_status hexaforge_family_raw(const hexaforge_family_record* rec,
                                      char field, char** out) {
  return guarded([&] {
    size_t i;
    switch (field) {
      case 'a': i = 0; break;
      case 'b': i = 1; break;
      case 'c': i = 2; break;
      case 'd': i = 3; break;
      case 'e': i = 4; break;
      case 'f': i = 5; break;
      default: throw Error(ErrorKind::argument, "field must be one of a..f");
    }
    *out = dup_string(to_string(rec->raw[i]));
  });
}

const hexaforge_solution* hexaforge_family_solution(const hexaforge_family_record* rec) {
  return &rec->sol;
}

hexaforge_status hexaforge_family_h_squared(const hexaforge_family_record* rec,
                                            char** out) {
  return guarded([&] { *out = dup_string(to_string(rec->h_sq)); });
}

hexaforge_status hexaforge_family_params(const hexaforge_family_record* rec,
                                         char** r, char** s, char** lambda,
                                         char** p, char** q, char** mu) {
  return guarded([&] {
    if (r) *r = dup_string(to_string(rec->params.r));
    if (s) *s = dup_string(to_string(rec->params.s));
    if (lambda) *lambda = dup_string(to_string(rec->params.lambda));
    if (p) *p = dup_string(to_string(rec->params.p));
    if (q) *q = dup_string(to_string(rec->params.q));
    if (mu) *mu = dup_string(to_string(rec->params.mu));
  });
}

void hexaforge_family_record_free(hexaforge_family_record* rec) { delete rec; }

/* ---- chord construction ------------------------------------------------ */

hexaforge_status hexaforge_chord(const char* q0, const char* s0,
                                 const char* p1x, const char* p1y,
                                 const char* p2x, const char* p2y,
                                 hexaforge_chord_result** out) {
  return guarded([&] {
    PlaneSlice slice{parse_rat_arg(q0, "q0"), parse_rat_arg(s0, "s0")};
    SlicePoint p1{parse_rat_arg(p1x, "p1.x"), parse_rat_arg(p1y, "p1.y")};
    SlicePoint p2{parse_rat_arg(p2x, "p2.x"), parse_rat_arg(p2y, "p2.y")};
    SlicePoint pt = chord_intersect(slice, p1, p2);
    auto res = std::make_unique<hexaforge_chord_result>();
    res->x = pt.x;
    res->y = pt.y;
    SurfacePoint sp{pt.x, slice.q0, pt.y, slice.s0};
    res->cleared = clear_to_integers(sp);
    if (auto sol = solution_from_surface_point(sp))
      res->sol = hexaforge_solution{std::move(*sol)};
    *out = res.release();
  });
}

hexaforge_status hexaforge_chord_point(const hexaforge_chord_result* res,
                                       char** x, char** y) {
  return guarded([&] {
    if (x) *x = dup_string(to_string(res->x));
    if (y) *y = dup_string(to_string(res->y));
  });
}

hexaforge_status hexaforge_chord_cleared(const hexaforge_chord_result* res,
                                         char** p, char** q, char** r, char** s) {
  return guarded([&] {
    if (p) *p = dup_string(to_string(res->cleared[0]));
    if (q) *q = dup_string(to_string(res->cleared[1]));
    if (r) *r = dup_string(to_string(res->cleared[2]));
    if (s) *s = dup_string(to_string(res->cleared[3]));
  });
}

int hexaforge_chord_has_solution(const hexaforge_chord_result* res) {
  return res->sol.has_value() ? 1 : 0;
}

const hexaforge_solution* hexaforge_chord_solution(const hexaforge_chord_result* res) {
  return res->sol.has_value() ? &*res->sol : nullptr;
}

void hexaforge_chord_result_free(hexaforge_chord_result* res) { delete res; }

/* ---- embedding, metrics, area, mesh ------------------------------------ */

hexaforge_status hexaforge_height_squared(const hexaforge_solution* sol, char** out) {
  Rat h_sq = height_squared_raw(sol->v);
  if (out) *out = dup_string(to_string(h_sq));
  if (h_sq <= 0) {
    g_last_error = "flat or non-embeddable solid: h^2 = " + to_string(h_sq) + " <= 0";
    return HEXAFORGE_E_NOT_EMBEDDABLE;
  }
  return HEXAFORGE_OK;
}

hexaforge_status hexaforge_embed(const hexaforge_solution* sol,
                                 hexaforge_embedding** out) {
  return guarded([&] { *out = new hexaforge_embedding{embed(sol->v)}; });
}

hexaforge_status hexaforge_embedding_h_squared(const hexaforge_embedding* emb,
                                               char** out) {
  return guarded([&] { *out = dup_string(to_string(emb->v.h_sq)); });
}

size_t hexaforge_embedding_vertex_count(const hexaforge_embedding* emb) {
  return emb->v.vertices.size();
}

hexaforge_status hexaforge_embedding_vertex(const hexaforge_embedding* emb,
                                            size_t i, char** x, char** y,
                                            int* level) {
  return guarded([&] {
    if (i >= emb->v.vertices.size())
      throw Error(ErrorKind::argument, "vertex index out of range");
    const auto& v = emb->v.vertices[i];
    if (x) *x = dup_string(to_string(v.x));
    if (y) *y = dup_string(to_string(v.y));
    if (level) *level = v.level;
  });
}

size_t hexaforge_embedding_face_count(const hexaforge_embedding* emb) {
  return emb->v.faces.size();
}

hexaforge_status hexaforge_embedding_face(const hexaforge_embedding* emb,
                                          size_t i, int idx[4]) {
  return guarded([&] {
    if (i >= emb->v.faces.size())
      throw Error(ErrorKind::argument, "face index out of range");
    for (int k = 0; k < 4; ++k) idx[k] = emb->v.faces[i][k];
  });
}

hexaforge_status hexaforge_embedding_verify(const hexaforge_embedding* emb,
                                            hexaforge_report** out) {
  return guarded([&] { *out = make_report(verify_metrics(emb->v)); });
}

void hexaforge_embedding_free(hexaforge_embedding* emb) { delete emb; }

hexaforge_status hexaforge_mesh_create(const hexaforge_embedding* emb, int digits,
                                       hexaforge_mesh** out) {
  return guarded([&] { *out = new hexaforge_mesh{to_mesh(emb->v, digits)}; });
}

hexaforge_status hexaforge_mesh_vertex(const hexaforge_mesh* mesh, size_t i,
                                       char** x, char** y, char** z) {
  return guarded([&] {
    if (i >= mesh->v.vertices.size())
      throw Error(ErrorKind::argument, "vertex index out of range");
    const auto& v = mesh->v.vertices[i];
    if (x) *x = dup_string(v[0]);
    if (y) *y = dup_string(v[1]);
    if (z) *z = dup_string(v[2]);
  });
}

hexaforge_status hexaforge_mesh_face(const hexaforge_mesh* mesh, size_t i,
                                     int idx[4]) {
  return guarded([&] {
    if (i >= mesh->v.faces.size())
      throw Error(ErrorKind::argument, "face index out of range");
    for (int k = 0; k < 4; ++k) idx[k] = mesh->v.faces[i][k];
  });
}

void hexaforge_mesh_free(hexaforge_mesh* mesh) { delete mesh; }

hexaforge_status hexaforge_surface_area(const hexaforge_solution* sol,
                                        hexaforge_radical** out) {
  return guarded([&] { *out = new hexaforge_radical{surface_area(sol->v)}; });
}

hexaforge_status hexaforge_radical_parts(const hexaforge_radical* rad,
                                         char** rational_part, char** coefficient,
                                         char** radicand) {
  return guarded([&] {
    if (rational_part) *rational_part = dup_string(to_string(rad->v.rational_part));
    if (coefficient) *coefficient = dup_string(to_string(rad->v.coefficient));
    if (radicand) *radicand = dup_string(to_string(rad->v.radicand));
  });
}

hexaforge_status hexaforge_radical_decimal(const hexaforge_radical* rad,
                                           int digits, char** out) {
  return guarded([&] { *out = dup_string(rad->v.decimal(digits)); });
}

void hexaforge_radical_free(hexaforge_radical* rad) { delete rad; }

/* ---- sampling tables for plots ----------------------------------------- */

hexaforge_status hexaforge_plot_curve3d(const char* t_from, const char* t_to,
                                        const char* step, hexaforge_table** out) {
  return guarded([&] {
    auto samples = sample_range(t_from, t_to, step);
    auto table = std::make_unique<hexaforge_table>();
    table->col_names = {"t", "x", "y", "z"};
    for (const Rat& t : samples) {
      AffinePoint3 pt = dehomogenize_curve2(t);
      table->rows.push_back({t, pt.x, pt.y, pt.z});
    }
    *out = table.release();
  });
}

hexaforge_status hexaforge_plot_projection(const char* t_from, const char* t_to,
                                           const char* step, hexaforge_table** out) {
  return guarded([&] {
    auto samples = sample_range(t_from, t_to, step);
    auto table = std::make_unique<hexaforge_table>();
    table->col_names = {"t", "x", "z", "residual"};
    for (const Rat& t : samples) {
      AffinePoint3 pt = dehomogenize_curve2(t);
      table->rows.push_back({t, pt.x, pt.z, projection_residual(t)});
    }
    *out = table.release();
  });
}

hexaforge_status hexaforge_plot_surface(const char* from, const char* to,
                                        const char* step, hexaforge_table** out) {
  return guarded([&] {
    auto axis = sample_range(from, to, step);
    if (axis.size() > 2000)
      throw Error(ErrorKind::argument, "grid axis too fine");
    auto table = std::make_unique<hexaforge_table>();
    table->col_names = {"x", "y", "z", "G"};
    for (const Rat& x : axis)
      for (const Rat& y : axis)
        for (const Rat& z : axis)
          table->rows.push_back({x, y, z, affine_surface_value(x, y, z)});
    *out = table.release();
  });
}

size_t hexaforge_table_rows(const hexaforge_table* table) { return table->rows.size(); }

size_t hexaforge_table_cols(const hexaforge_table* table) {
  return table->col_names.size();
}

const char* hexaforge_table_col_name(const hexaforge_table* table, size_t j) {
  return j < table->col_names.size() ? table->col_names[j].c_str() : nullptr;
}

hexaforge_status hexaforge_table_cell(const hexaforge_table* table, size_t i,
                                      size_t j, char** out) {
  return guarded([&] {
    if (i >= table->rows.size() || j >= table->rows[i].size())
      throw Error(ErrorKind::argument, "table index out of range");
    *out = dup_string(to_string(table->rows[i][j]));
  });
}

void hexaforge_table_free(hexaforge_table* table) { delete table; }

/* ---- norm-equation parameterizations ------------------------------------ */

namespace {

Int parse_int_arg(const char* text, const char* what) {
  if (text == nullptr)
    throw Error(ErrorKind::argument, std::string(what) + " is null");
  return parse_int(text);
}

}  // namespace

hexaforge_status hexaforge_pyth_from_params(const char* m, const char* n,
                                            const char* scale, char** x,
                                            char** y, char** z) {
  return guarded([&] {
    PythTriple t = pyth_from_params(parse_int_arg(m, "m"), parse_int_arg(n, "n"),
                                    parse_positive_int(scale, "scale"));
    if (x) *x = dup_string(to_string(t.x));
    if (y) *y = dup_string(to_string(t.y));
    if (z) *z = dup_string(to_string(t.z));
  });
}

hexaforge_status hexaforge_lift_to_twosquare(const char* x, const char* y,
                                             const char* z, char** ox,
                                             char** oy, char** oz) {
  return guarded([&] {
    TwoSquareTriple t = lift_to_twosquare({parse_int_arg(x, "x"),
                                           parse_int_arg(y, "y"),
                                           parse_int_arg(z, "z")});
    if (ox) *ox = dup_string(to_string(t.x));
    if (oy) *oy = dup_string(to_string(t.y));
    if (oz) *oz = dup_string(to_string(t.z));
  });
}

hexaforge_status hexaforge_project_to_pyth(const char* x, const char* y,
                                           const char* z, char** ox, char** oy,
                                           char** oz) {
  return guarded([&] {
    PythTriple t = project_to_pyth({parse_int_arg(x, "x"), parse_int_arg(y, "y"),
                                    parse_int_arg(z, "z")});
    if (ox) *ox = dup_string(to_string(t.x));
    if (oy) *oy = dup_string(to_string(t.y));
    if (oz) *oz = dup_string(to_string(t.z));
  });
}

/* ---- misc --------------------------------------------------------------- */

hexaforge_status hexaforge_quartic_form(const char* p, const char* q,
                                        const char* r, const char* s, char** out) {
  return guarded([&] {
    Rat v = quartic_form(parse_rat_arg(p, "p"), parse_rat_arg(q, "q"),
                         parse_rat_arg(r, "r"), parse_rat_arg(s, "s"));
    *out = dup_string(to_string(v));
  });
}

hexaforge_status hexaforge_curve_family(int id, const char* q, const char* s,
                                        char** out_p, char** out_q, char** out_r,
                                        char** out_s) {
  return guarded([&] {
    SurfacePoint pt = curve_family(id, parse_rat_arg(q, "q"), parse_rat_arg(s, "s"));
    if (out_p) *out_p = dup_string(to_string(pt.p));
    if (out_q) *out_q = dup_string(to_string(pt.q));
    if (out_r) *out_r = dup_string(to_string(pt.r));
    if (out_s) *out_s = dup_string(to_string(pt.s));
  });
}

hexaforge_status hexaforge_projection_residual(const char* t, char** out) {
  return guarded([&] {
    *out = dup_string(to_string(projection_residual(parse_rat_arg(t, "t"))));
  });
}

hexaforge_status hexaforge_curve_point(const char* t, char** x, char** y, char** z) {
  return guarded([&] {
    AffinePoint3 pt = dehomogenize_curve2(parse_rat_arg(t, "t"));
    if (x) *x = dup_string(to_string(pt.x));
    if (y) *y = dup_string(to_string(pt.y));
    if (z) *z = dup_string(to_string(pt.z));
  });
}

hexaforge_status hexaforge_format_decimal(const char* rational, int digits,
                                          char** out) {
  return guarded([&] {
    *out = dup_string(decimal_string(parse_rat_arg(rational, "value"), digits));
  });
}

} /* extern "C" */
