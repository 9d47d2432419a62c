#include "geometry.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace hexaforge {

Rat height_squared_raw(const HexaSolution& sol) {
  return Rat(sq(sol.d)) - Rat(sq(sol.a) + sq(sol.b)) / 2;
}

Rat height_squared(const HexaSolution& sol) {
  Rat h_sq = height_squared_raw(sol);
  if (h_sq <= 0)
    throw Error(ErrorKind::not_embeddable,
                "flat or non-embeddable solid: h^2 = " + to_string(h_sq) +
                    " <= 0");
  return h_sq;
}

Int family_height_squared(const Int& n) {
  if (n < 1) throw Error(ErrorKind::argument, "family index n must be >= 1");
  const Int n4 = sq(sq(n)), n8 = sq(n4);
  return 2 * (2 * n4 - 1) * (8 * n4 - 1) * (32 * n4 - 1) * (64 * n8 + 8 * n4 + 1);
}

EmbeddedHexahedron embed(const HexaSolution& sol) {
  EmbeddedHexahedron emb;
  emb.solution = sol;
  emb.h_sq = height_squared(sol);
  const Rat ha = Rat(sol.a) / 2, hb = Rat(sol.b) / 2;
  emb.vertices = {{
      {-ha, hb, 0},   // 0
      {ha, hb, 0},    // 1
      {ha, -hb, 0},   // 2
      {-ha, -hb, 0},  // 3
      {hb, ha, 1},    // 4
      {-hb, ha, 1},   // 5
      {-hb, -ha, 1},  // 6
      {hb, -ha, 1},   // 7
  }};
  emb.faces = {{
      {0, 1, 2, 3},  // bottom
      {4, 5, 6, 7},  // top
      {1, 0, 5, 4},  // +y
      {2, 1, 4, 7},  // +x
      {3, 2, 7, 6},  // -y
      {0, 3, 6, 5},  // -x
  }};
  return emb;
}

std::vector<MetricCheck> MetricsReport::failures() const {
  std::vector<MetricCheck> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c);
  return out;
}

std::string MetricsReport::describe() const {
  if (valid) return "all metric checks pass";
  std::string out;
  for (const auto& c : failures()) {
    if (!out.empty()) out += "; ";
    out += c.name + ": " + to_string(c.got) + " != " + to_string(c.want);
  }
  return out;
}

namespace {

Rat dist_sq(const EmbeddedHexahedron& emb, int i, int j) {
  const auto& u = emb.vertices[i];
  const auto& v = emb.vertices[j];
  Rat d2 = sq(u.x - v.x) + sq(u.y - v.y);
  if (u.level != v.level) d2 += emb.h_sq;
  return d2;
}

void push_check(MetricsReport& rep, std::string name, Rat got, Rat want) {
  bool ok = got == want;
  rep.valid = rep.valid && ok;
  rep.checks.push_back({std::move(name), std::move(got), std::move(want), ok});
}

std::string seg_name(const char* what, int i, int j, const char* sym) {
  return std::string(what) + " " + std::to_string(i) + "-" + std::to_string(j) +
         " (" + sym + "^2)";
}

// The z-column of the edge-vector matrix carries a common factor h, so the
// triple product is h * D with D rational; coplanarity is D = 0.
Rat planar_defect(const EmbeddedHexahedron& emb, const std::array<int, 4>& face) {
  const auto& v0 = emb.vertices[face[0]];
  Rat ux[3], uy[3], uz[3];
  for (int k = 1; k < 4; ++k) {
    const auto& v = emb.vertices[face[k]];
    ux[k - 1] = v.x - v0.x;
    uy[k - 1] = v.y - v0.y;
    uz[k - 1] = Rat(v.level - v0.level);
  }
  return ux[0] * (uy[1] * uz[2] - uz[1] * uy[2]) -
         uy[0] * (ux[1] * uz[2] - uz[1] * ux[2]) +
         uz[0] * (ux[1] * uy[2] - uy[1] * ux[2]);
}

}  // namespace

MetricsReport verify_metrics(const EmbeddedHexahedron& emb) {
  const HexaSolution& sol = emb.solution;
  const Rat a2{sq(sol.a)}, b2{sq(sol.b)}, c2{sq(sol.c)};
  const Rat d2{sq(sol.d)}, e2{sq(sol.e)}, f2{sq(sol.f)};

  MetricsReport rep;
  rep.valid = true;

  // 12 edges
  const std::array<std::tuple<int, int, const Rat*, const char*>, 12> edges = {{
      {0, 1, &a2, "a"}, {1, 2, &b2, "b"}, {2, 3, &a2, "a"}, {3, 0, &b2, "b"},
      {4, 5, &b2, "b"}, {5, 6, &a2, "a"}, {6, 7, &b2, "b"}, {7, 4, &a2, "a"},
      {0, 5, &e2, "e"}, {1, 4, &e2, "e"}, {2, 7, &e2, "e"}, {3, 6, &e2, "e"},
  }};
  for (const auto& [i, j, want, sym] : edges)
    push_check(rep, seg_name("edge", i, j, sym), dist_sq(emb, i, j), *want);

  // 4 rectangle diagonals
  for (const auto& [i, j] : std::array<std::array<int, 2>, 4>{{{0, 2}, {1, 3}, {4, 6}, {5, 7}}})
    push_check(rep, seg_name("rectangle diagonal", i, j, "c"), dist_sq(emb, i, j), c2);

  // 8 trapezoid diagonals, two per slanted face
  for (const auto& [i, j] : std::array<std::array<int, 2>, 8>{
           {{0, 4}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {3, 7}, {3, 5}, {0, 6}}})
    push_check(rep, seg_name("trapezoid diagonal", i, j, "d"), dist_sq(emb, i, j), d2);

  // 4 space diagonals
  for (const auto& [i, j] : std::array<std::array<int, 2>, 4>{{{0, 7}, {1, 6}, {2, 5}, {3, 4}}})
    push_check(rep, seg_name("space diagonal", i, j, "f"), dist_sq(emb, i, j), f2);

  // trapezoid planarity
  for (int k = 2; k < 6; ++k)
    push_check(rep, "planarity face " + std::to_string(k),
               planar_defect(emb, emb.faces[k]), Rat(0));

  return rep;
}

std::string RadicalValue::decimal(int digits) const {
  if (digits < 1 || digits > 10000)
    throw Error(ErrorKind::argument, "digits must be in 1..10000");
  if (coefficient == 0) return decimal_string(rational_part, digits);
  // headroom so the sum keeps the requested digits
  const unsigned long prec =
      std::max(128ul, (static_cast<unsigned long>(digits) + 8) * 4 + 64);
  mpf_class root(radicand, prec);
  root = sqrt(root);
  mpf_class value = mpf_class(rational_part, prec) + mpf_class(coefficient, prec) * root;
  std::ostringstream os;
  os << std::setprecision(digits) << value;
  return os.str();
}

RadicalValue surface_area(const HexaSolution& sol) {
  const Int ab_sum = sol.a + sol.b;
  const Int radicand_raw = 4 * sq(sol.d) - sq(ab_sum);
  if (radicand_raw <= 0)
    throw Error(ErrorKind::degenerate_face,
                "trapezoid height vanishes: 4d^2 - (a+b)^2 = " +
                    to_string(radicand_raw) + " <= 0");
  auto [root_part, squarefree] = squarefree_split(radicand_raw);
  RadicalValue area;
  area.rational_part = Rat(2 * sol.a * sol.b);
  if (squarefree == 1) {
    area.rational_part += Rat(ab_sum * root_part);
    area.coefficient = 0;
    area.radicand = 0;
  } else {
    area.coefficient = Rat(ab_sum * root_part);
    area.radicand = Rat(squarefree);
  }
  return area;
}

Mesh to_mesh(const EmbeddedHexahedron& emb, int digits) {
  Mesh mesh;
  const std::string h = decimal_sqrt_string(emb.h_sq, digits);
  for (int i = 0; i < 8; ++i) {
    const auto& v = emb.vertices[i];
    mesh.vertices[i] = {decimal_string(v.x, digits), decimal_string(v.y, digits),
                        v.level == 0 ? "0" : h};
  }
  mesh.faces = emb.faces;
  return mesh;
}

}  // namespace hexaforge
