#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "hexaforge/hexaforge.h"

namespace {

std::string take(char* p) {
  std::string out(p ? p : "");
  hexaforge_string_free(p);
  return out;
}

std::string field(const hexaforge_solution* sol, char name) {
  char* raw = nullptr;
  REQUIRE(hexaforge_solution_field(sol, name, &raw) == HEXAFORGE_OK);
  return take(raw);
}

}  // namespace

TEST_CASE("status classes follow the exit-code contract") {
  CHECK(hexaforge_status_class(HEXAFORGE_OK) == 0);
  CHECK(hexaforge_status_class(HEXAFORGE_E_NOT_A_SOLUTION) == 1);
  CHECK(hexaforge_status_class(HEXAFORGE_E_NOT_EMBEDDABLE) == 1);
  CHECK(hexaforge_status_class(HEXAFORGE_E_AT_INFINITY) == 1);
  CHECK(hexaforge_status_class(HEXAFORGE_E_MISMATCH) == 1);
  CHECK(hexaforge_status_class(HEXAFORGE_E_DEGENERATE_FACE) == 1);
  CHECK(hexaforge_status_class(HEXAFORGE_E_ARGUMENT) == 2);
  CHECK(hexaforge_status_class(HEXAFORGE_E_INTERNAL) == 2);
}

TEST_CASE("verify reports") {
  hexaforge_report* rep = nullptr;
  REQUIRE(hexaforge_verify("8", "15", "17", "13", "7", "17", &rep) == HEXAFORGE_OK);
  CHECK(hexaforge_report_valid(rep) == 1);
  CHECK(hexaforge_report_check_count(rep) == 3);
  hexaforge_report_free(rep);

  rep = nullptr;
  REQUIRE(hexaforge_verify("24", "10", "26", "16", "7", "23", &rep) == HEXAFORGE_OK);
  CHECK(hexaforge_report_valid(rep) == 0);
  bool found = false;
  for (size_t i = 0; i < hexaforge_report_check_count(rep); ++i) {
    char *eq = nullptr, *lhs = nullptr, *rhs = nullptr;
    int ok = 0;
    REQUIRE(hexaforge_report_check(rep, i, &eq, &lhs, &rhs, &ok) == HEXAFORGE_OK);
    std::string eq_s = take(eq), lhs_s = take(lhs), rhs_s = take(rhs);
    if (eq_s == "d^2 = e^2 + a*b") {
      CHECK(ok == 0);
      CHECK(lhs_s == "256");
      CHECK(rhs_s == "289");
      found = true;
    }
  }
  CHECK(found);
  hexaforge_report_free(rep);

  rep = nullptr;
  CHECK(hexaforge_verify("8", "15", "x", "13", "7", "17", &rep) ==
        HEXAFORGE_E_ARGUMENT);
  CHECK(hexaforge_verify("0", "15", "17", "13", "7", "17", &rep) ==
        HEXAFORGE_E_ARGUMENT);
  CHECK(std::string(hexaforge_last_error()).size() > 0);
}

TEST_CASE("solution handles") {
  hexaforge_solution* sol = nullptr;
  REQUIRE(hexaforge_solution_create("15", "8", "17", "13", "17", "7", &sol) ==
          HEXAFORGE_OK);
  CHECK(field(sol, 'a') == "8");
  CHECK(field(sol, 'b') == "15");
  CHECK(field(sol, 'e') == "7");
  CHECK(field(sol, 'f') == "17");

  char* size = nullptr;
  REQUIRE(hexaforge_solution_size(sol, &size) == HEXAFORGE_OK);
  CHECK(take(size) == "60");

  int by3 = 0, by4 = 0, by5 = 0, by60 = 0;
  REQUIRE(hexaforge_solution_divisibility(sol, &by3, &by4, &by5, &by60) ==
          HEXAFORGE_OK);
  CHECK(by3 == 1);
  CHECK(by4 == 1);
  CHECK(by5 == 1);
  CHECK(by60 == 1);

  hexaforge_solution* doubled = nullptr;
  REQUIRE(hexaforge_solution_create("16", "30", "34", "26", "14", "34",
                                    &doubled) == HEXAFORGE_OK);
  hexaforge_solution* prim = nullptr;
  char* scale = nullptr;
  REQUIRE(hexaforge_solution_primitive(doubled, &prim, &scale) == HEXAFORGE_OK);
  CHECK(take(scale) == "2");
  CHECK(field(prim, 'a') == "8");

  int alike = 0;
  REQUIRE(hexaforge_solution_similar(sol, doubled, &alike) == HEXAFORGE_OK);
  CHECK(alike == 1);

  hexaforge_solution* invalid = nullptr;
  CHECK(hexaforge_solution_create("8", "15", "17", "13", "7", "18", &invalid) ==
        HEXAFORGE_E_NOT_A_SOLUTION);

  hexaforge_solution_free(prim);
  hexaforge_solution_free(doubled);
  hexaforge_solution_free(sol);
}

TEST_CASE("enumeration list") {
  hexaforge_list* list = nullptr;
  REQUIRE(hexaforge_enumerate("120", 1, &list) == HEXAFORGE_OK);
  REQUIRE(hexaforge_list_count(list) == 2);
  const hexaforge_solution* second = hexaforge_list_solution(list, 1);
  REQUIRE(second != nullptr);
  CHECK(field(second, 'a') == "10");
  CHECK(field(second, 'd') == "17");
  char* size = nullptr;
  REQUIRE(hexaforge_list_size_of(list, 1, &size) == HEXAFORGE_OK);
  CHECK(take(size) == "120");
  CHECK(hexaforge_list_provenance_count(list, 1) == 2);
  char *r = nullptr, *s = nullptr, *lambda = nullptr, *p = nullptr, *q = nullptr,
       *mu = nullptr;
  REQUIRE(hexaforge_list_provenance(list, 1, 0, &r, &s, &lambda, &p, &q, &mu) ==
          HEXAFORGE_OK);
  CHECK(take(r) == "5");
  CHECK(take(s) == "1");
  CHECK(take(lambda) == "1");
  CHECK(take(p) == "4");
  CHECK(take(q) == "1");
  CHECK(take(mu) == "1");
  hexaforge_list_free(list);

  CHECK(hexaforge_enumerate("0", 1, &list) == HEXAFORGE_E_ARGUMENT);
  CHECK(hexaforge_enumerate("x", 1, &list) == HEXAFORGE_E_ARGUMENT);
}

TEST_CASE("family records") {
  hexaforge_family_record* rec = nullptr;
  REQUIRE(hexaforge_family("1", &rec) == HEXAFORGE_OK);
  const hexaforge_solution* sol = hexaforge_family_solution(rec);
  CHECK(field(sol, 'a') == "238");
  CHECK(field(sol, 'b') == "240");
  char* raw_a = nullptr;
  REQUIRE(hexaforge_family_raw(rec, 'a', &raw_a) == HEXAFORGE_OK);
  CHECK(take(raw_a) == "240");
  char* h_sq = nullptr;
  REQUIRE(hexaforge_family_h_squared(rec, &h_sq) == HEXAFORGE_OK);
  CHECK(take(h_sq) == "31682");
  char *r = nullptr, *s = nullptr, *lambda = nullptr, *p = nullptr, *q = nullptr,
       *mu = nullptr;
  REQUIRE(hexaforge_family_params(rec, &r, &s, &lambda, &p, &q, &mu) ==
          HEXAFORGE_OK);
  CHECK(take(r) == "-7");
  CHECK(take(s) == "17");
  CHECK(take(lambda) == "1");
  CHECK(take(p) == "-3");
  CHECK(take(q) == "17");
  CHECK(take(mu) == "1");
  hexaforge_family_record_free(rec);

  CHECK(hexaforge_family("0", &rec) == HEXAFORGE_E_ARGUMENT);
}

TEST_CASE("chord results") {
  hexaforge_chord_result* res = nullptr;
  REQUIRE(hexaforge_chord("1", "1", "-1", "0", "1", "1", &res) == HEXAFORGE_OK);
  char *x = nullptr, *y = nullptr;
  REQUIRE(hexaforge_chord_point(res, &x, &y) == HEXAFORGE_OK);
  CHECK(take(x) == "1/5");
  CHECK(take(y) == "3/5");
  char *p = nullptr, *q = nullptr, *r = nullptr, *s = nullptr;
  REQUIRE(hexaforge_chord_cleared(res, &p, &q, &r, &s) == HEXAFORGE_OK);
  CHECK(take(p) == "1");
  CHECK(take(q) == "5");
  CHECK(take(r) == "3");
  CHECK(take(s) == "5");
  REQUIRE(hexaforge_chord_has_solution(res) == 1);
  const hexaforge_solution* sol = hexaforge_chord_solution(res);
  CHECK(field(sol, 'a') == "16");
  CHECK(field(sol, 'b') == "30");
  CHECK(field(sol, 'f') == "34");
  hexaforge_chord_result_free(res);

  CHECK(hexaforge_chord("1", "1", "-1", "-1", "1", "1", &res) ==
        HEXAFORGE_E_AT_INFINITY);
  CHECK(hexaforge_chord("1", "1", "2", "2", "1", "1", &res) ==
        HEXAFORGE_E_ARGUMENT);
}

TEST_CASE("embedding, metrics, mesh and area") {
  hexaforge_solution* sol = nullptr;
  REQUIRE(hexaforge_solution_create("8", "15", "17", "13", "7", "17", &sol) ==
          HEXAFORGE_OK);

  char* h_sq = nullptr;
  REQUIRE(hexaforge_height_squared(sol, &h_sq) == HEXAFORGE_OK);
  CHECK(take(h_sq) == "49/2");

  hexaforge_embedding* emb = nullptr;
  REQUIRE(hexaforge_embed(sol, &emb) == HEXAFORGE_OK);
  CHECK(hexaforge_embedding_vertex_count(emb) == 8);
  CHECK(hexaforge_embedding_face_count(emb) == 6);
  char *vx = nullptr, *vy = nullptr;
  int level = -1;
  REQUIRE(hexaforge_embedding_vertex(emb, 0, &vx, &vy, &level) == HEXAFORGE_OK);
  CHECK(take(vx) == "-4");
  CHECK(take(vy) == "15/2");
  CHECK(level == 0);

  hexaforge_report* metrics = nullptr;
  REQUIRE(hexaforge_embedding_verify(emb, &metrics) == HEXAFORGE_OK);
  CHECK(hexaforge_report_valid(metrics) == 1);
  CHECK(hexaforge_report_check_count(metrics) == 32);
  hexaforge_report_free(metrics);

  hexaforge_mesh* mesh = nullptr;
  REQUIRE(hexaforge_mesh_create(emb, 12, &mesh) == HEXAFORGE_OK);
  char *mx = nullptr, *my = nullptr, *mz = nullptr;
  REQUIRE(hexaforge_mesh_vertex(mesh, 4, &mx, &my, &mz) == HEXAFORGE_OK);
  CHECK(take(mx) == "7.5");
  CHECK(take(my) == "4");
  CHECK(take(mz) == "4.94974746831");
  int idx[4];
  REQUIRE(hexaforge_mesh_face(mesh, 0, idx) == HEXAFORGE_OK);
  CHECK(idx[0] == 0);
  hexaforge_mesh_free(mesh);

  hexaforge_radical* area = nullptr;
  REQUIRE(hexaforge_surface_area(sol, &area) == HEXAFORGE_OK);
  char *u = nullptr, *v = nullptr, *w = nullptr;
  REQUIRE(hexaforge_radical_parts(area, &u, &v, &w) == HEXAFORGE_OK);
  CHECK(take(u) == "240");
  CHECK(take(v) == "161");
  CHECK(take(w) == "3");
  char* dec = nullptr;
  REQUIRE(hexaforge_radical_decimal(area, 7, &dec) == HEXAFORGE_OK);
  CHECK(take(dec) == "518.8602");  // 240 + 161 sqrt(3)
  hexaforge_radical_free(area);

  hexaforge_embedding_free(emb);
  hexaforge_solution_free(sol);

  // non-embeddable: status carries the h^2 value anyway
  hexaforge_solution* flat = nullptr;
  REQUIRE(hexaforge_solution_create("10", "24", "26", "17", "7", "23", &flat) ==
          HEXAFORGE_OK);
  char* h_neg = nullptr;
  CHECK(hexaforge_height_squared(flat, &h_neg) == HEXAFORGE_E_NOT_EMBEDDABLE);
  CHECK(take(h_neg) == "-49");
  hexaforge_embedding* none = nullptr;
  CHECK(hexaforge_embed(flat, &none) == HEXAFORGE_E_NOT_EMBEDDABLE);
  hexaforge_solution_free(flat);
}

TEST_CASE("plot tables") {
  hexaforge_table* table = nullptr;
  REQUIRE(hexaforge_plot_curve3d("-2", "2", "1/10", &table) == HEXAFORGE_OK);
  CHECK(hexaforge_table_rows(table) == 41);
  CHECK(hexaforge_table_cols(table) == 4);
  CHECK(std::string(hexaforge_table_col_name(table, 0)) == "t");
  hexaforge_table_free(table);

  table = nullptr;
  REQUIRE(hexaforge_plot_projection("10", "10", "1", &table) == HEXAFORGE_OK);
  REQUIRE(hexaforge_table_rows(table) == 1);
  char* cell = nullptr;
  REQUIRE(hexaforge_table_cell(table, 0, 3, &cell) == HEXAFORGE_OK);
  CHECK(take(cell) == "0");  // exact residual
  REQUIRE(hexaforge_table_cell(table, 0, 1, &cell) == HEXAFORGE_OK);
  CHECK(take(cell) == "-30/160001");
  hexaforge_table_free(table);

  table = nullptr;
  REQUIRE(hexaforge_plot_surface("-2", "2", "1", &table) == HEXAFORGE_OK);
  CHECK(hexaforge_table_rows(table) == 125);
  hexaforge_table_free(table);

  CHECK(hexaforge_plot_curve3d("2", "-2", "1/10", &table) == HEXAFORGE_E_ARGUMENT);
  CHECK(hexaforge_plot_curve3d("-2", "2", "0", &table) == HEXAFORGE_E_ARGUMENT);
}

TEST_CASE("misc evaluation helpers") {
  char* out = nullptr;
  REQUIRE(hexaforge_quartic_form("2", "1", "2", "1", &out) == HEXAFORGE_OK);
  CHECK(take(out) == "6");
  REQUIRE(hexaforge_quartic_form("3", "2", "4", "1", &out) == HEXAFORGE_OK);
  CHECK(take(out) == "0");

  char *cp = nullptr, *cq = nullptr, *cr = nullptr, *cs = nullptr;
  REQUIRE(hexaforge_curve_family(2, "1", "1", &cp, &cq, &cr, &cs) == HEXAFORGE_OK);
  CHECK(take(cp) == "-3");
  CHECK(take(cq) == "17");
  CHECK(take(cr) == "-7");
  CHECK(take(cs) == "17");

  REQUIRE(hexaforge_projection_residual("7/3", &out) == HEXAFORGE_OK);
  CHECK(take(out) == "0");

  char *x = nullptr, *y = nullptr, *z = nullptr;
  REQUIRE(hexaforge_curve_point("1", &x, &y, &z) == HEXAFORGE_OK);
  CHECK(take(x) == "-3/17");
  CHECK(take(y) == "1");
  CHECK(take(z) == "-7/17");

  REQUIRE(hexaforge_format_decimal("49/2", 4, &out) == HEXAFORGE_OK);
  CHECK(take(out) == "24.5");
  CHECK(hexaforge_format_decimal("1/0", 4, &out) == HEXAFORGE_E_ARGUMENT);
}
