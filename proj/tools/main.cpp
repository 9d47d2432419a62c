// hexaforge CLI: enumeration, verification, family generation, chord
// construction, embedding export and plot-data emission.  Uses only the
// public C API from hexaforge/hexaforge.h; all exact values cross the
// boundary as decimal / "num/den" strings.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexaforge/hexaforge.h"

using ordered_json = nlohmann::ordered_json;

namespace {

struct CliError {
  int code;
  std::string message;
};

void check(hexaforge_status st) {
  if (st != HEXAFORGE_OK)
    throw CliError{hexaforge_status_class(st), hexaforge_last_error()};
}

std::string take(char* p) {
  std::string out(p ? p : "");
  hexaforge_string_free(p);
  return out;
}

template <auto F>
struct FnDeleter {
  template <typename T>
  void operator()(T* p) const {
    if (p) F(p);
  }
};

using ReportPtr = std::unique_ptr<hexaforge_report, FnDeleter<hexaforge_report_free>>;
using SolutionPtr = std::unique_ptr<hexaforge_solution, FnDeleter<hexaforge_solution_free>>;
using ListPtr = std::unique_ptr<hexaforge_list, FnDeleter<hexaforge_list_free>>;
using FamilyPtr =
    std::unique_ptr<hexaforge_family_record, FnDeleter<hexaforge_family_record_free>>;
using ChordPtr =
    std::unique_ptr<hexaforge_chord_result, FnDeleter<hexaforge_chord_result_free>>;
using EmbeddingPtr =
    std::unique_ptr<hexaforge_embedding, FnDeleter<hexaforge_embedding_free>>;
using MeshPtr = std::unique_ptr<hexaforge_mesh, FnDeleter<hexaforge_mesh_free>>;
using TablePtr = std::unique_ptr<hexaforge_table, FnDeleter<hexaforge_table_free>>;

int default_digits() {
  if (const char* env = std::getenv("HEXAFORGE_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 10000) return static_cast<int>(v);
  }
  return 12;
}

std::string field(const hexaforge_solution* sol, char name) {
  char* raw = nullptr;
  check(hexaforge_solution_field(sol, name, &raw));
  return take(raw);
}

std::string size_string(const hexaforge_solution* sol) {
  char* raw = nullptr;
  check(hexaforge_solution_size(sol, &raw));
  return take(raw);
}

std::string format_decimal(const std::string& rational, int digits) {
  char* raw = nullptr;
  check(hexaforge_format_decimal(rational.c_str(), digits, &raw));
  return take(raw);
}

ordered_json solution_json(const hexaforge_solution* sol) {
  ordered_json obj;
  for (char name : {'a', 'b', 'c', 'd', 'e', 'f'})
    obj[std::string(1, name)] = field(sol, name);
  obj["size"] = size_string(sol);
  return obj;
}

// ".."-separated rational range
std::pair<std::string, std::string> split_range(const std::string& range) {
  auto pos = range.find("..");
  if (pos == std::string::npos)
    throw CliError{2, "range must have the form FROM..TO: '" + range + "'"};
  return {range.substr(0, pos), range.substr(pos + 2)};
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(const std::string& max_size, const std::string& format,
                  unsigned workers, bool with_params) {
  hexaforge_list* raw = nullptr;
  check(hexaforge_enumerate(max_size.c_str(), workers, &raw));
  ListPtr list(raw);

  const size_t count = hexaforge_list_count(list.get());
  if (format == "csv") {
    std::printf("a,b,c,d,e,f,size%s\n", with_params ? ",params" : "");
    for (size_t i = 0; i < count; ++i) {
      const hexaforge_solution* sol = hexaforge_list_solution(list.get(), i);
      char* size_raw = nullptr;
      check(hexaforge_list_size_of(list.get(), i, &size_raw));
      std::string row;
      for (char name : {'a', 'b', 'c', 'd', 'e', 'f'}) row += field(sol, name) + ",";
      row += take(size_raw);
      if (with_params) {
        row += ",";
        const size_t pairs = hexaforge_list_provenance_count(list.get(), i);
        for (size_t k = 0; k < pairs; ++k) {
          char *r = nullptr, *s = nullptr, *lambda = nullptr, *p = nullptr,
               *q = nullptr, *mu = nullptr;
          check(hexaforge_list_provenance(list.get(), i, k, &r, &s, &lambda, &p,
                                          &q, &mu));
          if (k) row += ";";
          row += take(r) + ":" + take(s) + ":" + take(lambda) + ":" + take(p) +
                 ":" + take(q) + ":" + take(mu);
        }
      }
      std::printf("%s\n", row.c_str());
    }
  } else {  // json: one solution object per line
    for (size_t i = 0; i < count; ++i) {
      const hexaforge_solution* sol = hexaforge_list_solution(list.get(), i);
      ordered_json obj = solution_json(sol);
      ordered_json params = ordered_json::array();
      const size_t pairs = hexaforge_list_provenance_count(list.get(), i);
      for (size_t k = 0; k < pairs; ++k) {
        char *r = nullptr, *s = nullptr, *lambda = nullptr, *p = nullptr,
             *q = nullptr, *mu = nullptr;
        check(hexaforge_list_provenance(list.get(), i, k, &r, &s, &lambda, &p,
                                        &q, &mu));
        ordered_json rect;
        rect["r"] = take(r);
        rect["s"] = take(s);
        rect["lambda"] = take(lambda);
        ordered_json trap;
        trap["p"] = take(p);
        trap["q"] = take(q);
        trap["mu"] = take(mu);
        params.push_back(rect);
        params.push_back(trap);
      }
      obj["params"] = params;
      std::printf("%s\n", obj.dump().c_str());
    }
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::vector<std::string>& lengths, bool as_json) {
  hexaforge_report* raw = nullptr;
  check(hexaforge_verify(lengths[0].c_str(), lengths[1].c_str(),
                         lengths[2].c_str(), lengths[3].c_str(),
                         lengths[4].c_str(), lengths[5].c_str(), &raw));
  ReportPtr rep(raw);

  const bool valid = hexaforge_report_valid(rep.get()) != 0;
  if (as_json) {
    ordered_json obj;
    obj["valid"] = valid;
    ordered_json failures = ordered_json::array();
    for (size_t i = 0; i < hexaforge_report_check_count(rep.get()); ++i) {
      char *eq = nullptr, *lhs = nullptr, *rhs = nullptr;
      int ok = 0;
      check(hexaforge_report_check(rep.get(), i, &eq, &lhs, &rhs, &ok));
      std::string eq_s = take(eq), lhs_s = take(lhs), rhs_s = take(rhs);
      if (!ok) {
        ordered_json fail;
        fail["equation"] = eq_s;
        fail["lhs"] = lhs_s;
        fail["rhs"] = rhs_s;
        failures.push_back(fail);
      }
    }
    obj["failures"] = failures;
    std::printf("%s\n", obj.dump().c_str());
  } else if (valid) {
    std::printf("valid\n");
  } else {
    for (size_t i = 0; i < hexaforge_report_check_count(rep.get()); ++i) {
      char *eq = nullptr, *lhs = nullptr, *rhs = nullptr;
      int ok = 0;
      check(hexaforge_report_check(rep.get(), i, &eq, &lhs, &rhs, &ok));
      std::string eq_s = take(eq), lhs_s = take(lhs), rhs_s = take(rhs);
      if (!ok)
        std::printf("FAIL %s: %s != %s\n", eq_s.c_str(), lhs_s.c_str(),
                    rhs_s.c_str());
    }
  }
  return valid ? 0 : 1;
}

// ---- family ---------------------------------------------------------------

int run_family(long from, long to, const std::string& format) {
  if (format == "csv")
    std::printf(
        "a,b,c,d,e,f,size,n,h2,raw_a,raw_b,raw_c,raw_d,raw_e,raw_f\n");
  for (long n = from; n <= to; ++n) {
    hexaforge_family_record* raw = nullptr;
    check(hexaforge_family(std::to_string(n).c_str(), &raw));
    FamilyPtr rec(raw);
    const hexaforge_solution* sol = hexaforge_family_solution(rec.get());
    char* h_sq_raw = nullptr;
    check(hexaforge_family_h_squared(rec.get(), &h_sq_raw));
    std::string h_sq = take(h_sq_raw);

    std::string raw_vals[6];
    for (int i = 0; i < 6; ++i) {
      char* v = nullptr;
      check(hexaforge_family_raw(rec.get(), "abcdef"[i], &v));
      raw_vals[i] = take(v);
    }

    if (format == "csv") {
      std::string row;
      for (char name : {'a', 'b', 'c', 'd', 'e', 'f'}) row += field(sol, name) + ",";
      row += size_string(sol) + "," + std::to_string(n) + "," + h_sq;
      for (const auto& v : raw_vals) row += "," + v;
      std::printf("%s\n", row.c_str());
    } else {
      char *r = nullptr, *s = nullptr, *lambda = nullptr, *p = nullptr,
           *q = nullptr, *mu = nullptr;
      check(hexaforge_family_params(rec.get(), &r, &s, &lambda, &p, &q, &mu));
      ordered_json obj;
      obj["n"] = std::to_string(n);
      ordered_json raw_obj;
      const char* names = "abcdef";
      for (int i = 0; i < 6; ++i) raw_obj[std::string(1, names[i])] = raw_vals[i];
      obj["raw"] = raw_obj;
      ordered_json sol_obj = solution_json(sol);
      ordered_json rect;
      rect["r"] = take(r);
      rect["s"] = take(s);
      rect["lambda"] = take(lambda);
      ordered_json trap;
      trap["p"] = take(p);
      trap["q"] = take(q);
      trap["mu"] = take(mu);
      sol_obj["params"] = ordered_json::array({rect, trap});
      obj["solution"] = sol_obj;
      obj["h_squared"] = h_sq;
      std::printf("%s\n", obj.dump().c_str());
    }
  }
  return 0;
}

// ---- chord ----------------------------------------------------------------

int run_chord(const std::vector<std::string>& slice,
              const std::vector<std::string>& p1,
              const std::vector<std::string>& p2) {
  hexaforge_chord_result* raw = nullptr;
  check(hexaforge_chord(slice[0].c_str(), slice[1].c_str(), p1[0].c_str(),
                        p1[1].c_str(), p2[0].c_str(), p2[1].c_str(), &raw));
  ChordPtr res(raw);

  char *x = nullptr, *y = nullptr;
  check(hexaforge_chord_point(res.get(), &x, &y));
  std::printf("%s %s\n", x, y);
  hexaforge_string_free(x);
  hexaforge_string_free(y);

  char *p = nullptr, *q = nullptr, *r = nullptr, *s = nullptr;
  check(hexaforge_chord_cleared(res.get(), &p, &q, &r, &s));
  std::printf("surface point: %s %s %s %s\n", p, q, r, s);
  hexaforge_string_free(p);
  hexaforge_string_free(q);
  hexaforge_string_free(r);
  hexaforge_string_free(s);

  if (hexaforge_chord_has_solution(res.get())) {
    const hexaforge_solution* sol = hexaforge_chord_solution(res.get());
    std::printf("solution: %s %s %s %s %s %s\n", field(sol, 'a').c_str(),
                field(sol, 'b').c_str(), field(sol, 'c').c_str(),
                field(sol, 'd').c_str(), field(sol, 'e').c_str(),
                field(sol, 'f').c_str());
  }
  return 0;
}

// ---- embed ----------------------------------------------------------------

int run_embed(const std::vector<std::string>& lengths, const std::string& format,
              int digits) {
  hexaforge_solution* sol_raw = nullptr;
  check(hexaforge_solution_create(lengths[0].c_str(), lengths[1].c_str(),
                                  lengths[2].c_str(), lengths[3].c_str(),
                                  lengths[4].c_str(), lengths[5].c_str(),
                                  &sol_raw));
  SolutionPtr sol(sol_raw);

  hexaforge_embedding* emb_raw = nullptr;
  hexaforge_status st = hexaforge_embed(sol.get(), &emb_raw);
  if (st == HEXAFORGE_E_NOT_EMBEDDABLE) {
    char* h_sq = nullptr;
    hexaforge_height_squared(sol.get(), &h_sq);
    std::fprintf(stderr, "not embeddable: h^2 = %s <= 0\n", h_sq);
    hexaforge_string_free(h_sq);
    return 1;
  }
  check(st);
  EmbeddingPtr emb(emb_raw);

  hexaforge_mesh* mesh_raw = nullptr;
  check(hexaforge_mesh_create(emb.get(), digits, &mesh_raw));
  MeshPtr mesh(mesh_raw);

  if (format == "obj") {
    for (size_t i = 0; i < 8; ++i) {
      char *x = nullptr, *y = nullptr, *z = nullptr;
      check(hexaforge_mesh_vertex(mesh.get(), i, &x, &y, &z));
      std::printf("v %s %s %s\n", x, y, z);
      hexaforge_string_free(x);
      hexaforge_string_free(y);
      hexaforge_string_free(z);
    }
    for (size_t i = 0; i < 6; ++i) {
      int idx[4];
      check(hexaforge_mesh_face(mesh.get(), i, idx));
      std::printf("f %d %d %d %d\n", idx[0] + 1, idx[1] + 1, idx[2] + 1,
                  idx[3] + 1);
    }
    return 0;
  }

  // json: exact rationals as strings plus decimal mirrors
  char* h_sq_raw = nullptr;
  check(hexaforge_embedding_h_squared(emb.get(), &h_sq_raw));
  std::string h_sq = take(h_sq_raw);

  ordered_json obj;
  obj["solution"] = solution_json(sol.get());
  obj["h_squared"] = h_sq;
  {
    char *x = nullptr, *y = nullptr, *z = nullptr;
    check(hexaforge_mesh_vertex(mesh.get(), 4, &x, &y, &z));
    hexaforge_string_free(x);
    hexaforge_string_free(y);
    obj["h"] = take(z);
  }
  ordered_json vertices = ordered_json::array();
  for (size_t i = 0; i < 8; ++i) {
    char *ex = nullptr, *ey = nullptr;
    int level = 0;
    check(hexaforge_embedding_vertex(emb.get(), i, &ex, &ey, &level));
    char *mx = nullptr, *my = nullptr, *mz = nullptr;
    check(hexaforge_mesh_vertex(mesh.get(), i, &mx, &my, &mz));
    ordered_json v;
    v["x"] = take(ex);
    v["y"] = take(ey);
    v["level"] = level;
    v["xf"] = take(mx);
    v["yf"] = take(my);
    v["zf"] = take(mz);
    vertices.push_back(v);
  }
  obj["vertices"] = vertices;
  ordered_json faces = ordered_json::array();
  for (size_t i = 0; i < 6; ++i) {
    int idx[4];
    check(hexaforge_embedding_face(emb.get(), i, idx));
    faces.push_back(ordered_json::array({idx[0], idx[1], idx[2], idx[3]}));
  }
  obj["faces"] = faces;
  std::printf("%s\n", obj.dump(2).c_str());
  return 0;
}

// ---- plot -----------------------------------------------------------------

int run_plot_table(const hexaforge_table* table, int digits) {
  const size_t cols = hexaforge_table_cols(table);
  std::string header = "#";
  for (size_t j = 0; j < cols; ++j)
    header += std::string("\t") + hexaforge_table_col_name(table, j);
  std::printf("%s\n", header.c_str());
  for (size_t i = 0; i < hexaforge_table_rows(table); ++i) {
    std::string row;
    for (size_t j = 0; j < cols; ++j) {
      char* cell = nullptr;
      check(hexaforge_table_cell(table, i, j, &cell));
      std::string exact = take(cell);
      // residual stays exact so zero prints as 0; the rest are decimal
      std::string shown =
          std::string(hexaforge_table_col_name(table, j)) == "residual"
              ? exact
              : format_decimal(exact, digits);
      if (j) row += "\t";
      row += shown;
    }
    std::printf("%s\n", row.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexaforge: exact perfect-hexahedron toolkit"};
  app.require_subcommand(1);

  // enumerate
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "list all canonical solutions up to a size bound");
  std::string enum_max_size;
  std::string enum_format = "csv";
  unsigned enum_workers = 1;
  bool enum_params = false;
  cmd_enum->add_option("--max-size", enum_max_size, "largest size a*b/2 to scan")
      ->required();
  cmd_enum->add_option("--format", enum_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_enum->add_option("--workers", enum_workers, "threads over size buckets")
      ->check(CLI::Range(1u, 256u));
  cmd_enum->add_flag("--params", enum_params,
                     "append generating parameters column (csv)");

  // verify
  auto* cmd_verify =
      app.add_subcommand("verify", "check the three defining equations");
  std::vector<std::string> verify_lengths;
  bool verify_json = false;
  cmd_verify->add_option("lengths", verify_lengths, "a b c d e f")
      ->expected(6)
      ->required();
  cmd_verify->add_flag("--json", verify_json, "structured report");

  // family
  auto* cmd_family = app.add_subcommand(
      "family", "closed-form solution family records");
  long family_from = 0, family_to = 0;
  std::string family_format = "csv";
  cmd_family->add_option("--from", family_from, "first index n")->required();
  cmd_family->add_option("--to", family_to, "last index n (default: --from)");
  cmd_family->add_option("--format", family_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // chord
  auto* cmd_chord = app.add_subcommand(
      "chord", "third surface intersection of a chord in a (q0,s0) slice");
  std::vector<std::string> chord_slice, chord_p1, chord_p2;
  cmd_chord->add_option("--slice", chord_slice, "q0 s0")->expected(2)->required();
  cmd_chord->add_option("--p1", chord_p1, "first point x y")->expected(2)->required();
  cmd_chord->add_option("--p2", chord_p2, "second point x y")->expected(2)->required();

  // embed
  auto* cmd_embed =
      app.add_subcommand("embed", "realize a solution as a solid in 3-space");
  std::vector<std::string> embed_lengths;
  std::string embed_format = "obj";
  int embed_digits = 0;
  cmd_embed->add_option("lengths", embed_lengths, "a b c d e f")
      ->expected(6)
      ->required();
  cmd_embed->add_option("--format", embed_format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}));
  cmd_embed->add_option("--digits", embed_digits, "significant digits");

  // plot
  auto* cmd_plot = app.add_subcommand("plot", "tab-separated plot data");
  cmd_plot->require_subcommand(1);
  auto* plot_curve = cmd_plot->add_subcommand(
      "curve3d", "samples of the parameterized solution curve");
  auto* plot_proj = cmd_plot->add_subcommand(
      "projection", "x-z projection of the curve with exact residual");
  auto* plot_surf =
      cmd_plot->add_subcommand("surface", "affine quartic surface grid");
  std::string plot_t = "-2..2", plot_range = "-2..2";
  std::string plot_step_curve = "1/10", plot_step_proj = "1/10", plot_step_surf = "1";
  int plot_digits = 0;
  plot_curve->add_option("--t", plot_t, "parameter range FROM..TO");
  plot_curve->add_option("--step", plot_step_curve, "parameter step");
  plot_curve->add_option("--digits", plot_digits, "significant digits");
  plot_proj->add_option("--t", plot_t, "parameter range FROM..TO");
  plot_proj->add_option("--step", plot_step_proj, "parameter step");
  plot_proj->add_option("--digits", plot_digits, "significant digits");
  plot_surf->add_option("--range", plot_range, "axis range FROM..TO");
  plot_surf->add_option("--step", plot_step_surf, "axis step");
  plot_surf->add_option("--digits", plot_digits, "significant digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    if (cmd_enum->parsed())
      return run_enumerate(enum_max_size, enum_format, enum_workers, enum_params);
    if (cmd_verify->parsed()) return run_verify(verify_lengths, verify_json);
    if (cmd_family->parsed()) {
      if (!cmd_family->count("--to")) family_to = family_from;
      if (family_from < 1 || family_from > family_to)
        throw CliError{2, "family range requires 1 <= from <= to"};
      return run_family(family_from, family_to, family_format);
    }
    if (cmd_chord->parsed()) return run_chord(chord_slice, chord_p1, chord_p2);
    if (cmd_embed->parsed())
      return run_embed(embed_lengths, embed_format,
                       embed_digits > 0 ? embed_digits : default_digits());
    if (cmd_plot->parsed()) {
      const int digits = plot_digits > 0 ? plot_digits : default_digits();
      hexaforge_table* raw = nullptr;
      if (plot_curve->parsed()) {
        auto [from, to] = split_range(plot_t);
        check(hexaforge_plot_curve3d(from.c_str(), to.c_str(),
                                     plot_step_curve.c_str(), &raw));
      } else if (plot_proj->parsed()) {
        auto [from, to] = split_range(plot_t);
        check(hexaforge_plot_projection(from.c_str(), to.c_str(),
                                        plot_step_proj.c_str(), &raw));
      } else {
        auto [from, to] = split_range(plot_range);
        check(hexaforge_plot_surface(from.c_str(), to.c_str(),
                                     plot_step_surf.c_str(), &raw));
      }
      TablePtr table(raw);
      return run_plot_table(table.get(), digits);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code == 0 ? 1 : e.code;
  }
  return 2;
}
