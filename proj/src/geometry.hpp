#pragma once

#include <array>
#include <string>
#include <vector>

#include "core.hpp"

namespace hexaforge {

// d^2 - (a^2+b^2)/2; throws Error(not_embeddable) when <= 0.
Rat height_squared(const HexaSolution& sol);
// Same value with no positivity check (diagnostics).
Rat height_squared_raw(const HexaSolution& sol);

// h^2 of closed_form_family(n) in product form:
// 2(2n^4-1)(8n^4-1)(32n^4-1)(64n^8+8n^4+1).
Int family_height_squared(const Int& n);

// Exact planar coordinates plus a level flag; level 1 means z = sqrt(h_sq).
// Keeping z symbolic makes every squared distance an exact rational.
struct EmbeddedVertex {
  Rat x, y;
  int level;
};

struct EmbeddedHexahedron {
  HexaSolution solution;
  Rat h_sq;
  // 0..3 bottom rectangle (-a/2,b/2),(a/2,b/2),(a/2,-b/2),(-a/2,-b/2);
  // 4..7 top rectangle (b/2,a/2),(-b/2,a/2),(-b/2,-a/2),(b/2,-a/2)
  std::array<EmbeddedVertex, 8> vertices;
  // outward winding; faces[0] bottom, faces[1] top, faces[2..5] trapezoids
  std::array<std::array<int, 4>, 6> faces;
};

EmbeddedHexahedron embed(const HexaSolution& sol);

struct MetricCheck {
  std::string name;
  Rat got, want;
  bool ok;
};

struct MetricsReport {
  bool valid = false;
  std::vector<MetricCheck> checks;  // 28 squared lengths + 4 planarity

  std::vector<MetricCheck> failures() const;
  std::string describe() const;
};

// Recomputes every edge, face-diagonal and space-diagonal squared length
// exactly and checks each trapezoid's four vertices are coplanar.
MetricsReport verify_metrics(const EmbeddedHexahedron& emb);

// rational_part + coefficient * sqrt(radicand); radicand is a squarefree
// nonnegative integer, 0 when coefficient is 0.
struct RadicalValue {
  Rat rational_part;
  Rat coefficient;
  Rat radicand;

  std::string decimal(int digits) const;
};

// 2ab + (a+b) sqrt(4d^2 - (a+b)^2); throws Error(degenerate_face) when the
// radicand is nonpositive.
RadicalValue surface_area(const HexaSolution& sol);

struct Mesh {
  std::array<std::array<std::string, 3>, 8> vertices;  // decimal strings
  std::array<std::array<int, 4>, 6> faces;
};

// Decimal mesh with the requested significant digits; z is 0 or sqrt(h_sq).
Mesh to_mesh(const EmbeddedHexahedron& emb, int digits);

}  // namespace hexaforge
