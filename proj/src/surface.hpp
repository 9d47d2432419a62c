#pragma once

#include <array>
#include <optional>

#include "parameterize.hpp"

namespace hexaforge {

// F(p,q,r,s) = 2(p^2-q^2)pq - (r^2-s^2)rs, exact.
Rat quartic_form(const Rat& p, const Rat& q, const Rat& r, const Rat& s);

// A (p,r)-plane through frozen q = q0, s = s0; both nonzero.
struct PlaneSlice {
  Rat q0, s0;
};

// Values of p and r within a slice.
struct SlicePoint {
  Rat x, y;
  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
};

// The nine points {-q0,0,q0} x {-s0,0,s0}, all on the surface.
std::array<SlicePoint, 9> trivial_points(const PlaneSlice& slice);

// Third intersection of the line through two surface points with the slice
// curve, found by exact deflation of the parameter cubic.  Throws
// Error(at_infinity) when the line meets the surface again only at its
// points at infinity (asymptotic direction, or a line through three of the
// nine trivial points), Error(argument) for equal or off-surface inputs.
SlicePoint chord_intersect(const PlaneSlice& slice, const SlicePoint& p1,
                           const SlicePoint& p2);

struct SurfacePoint {
  Rat p, q, r, s;
};

// The six rational quintic curves lying on the surface, id in 1..6.
SurfacePoint curve_family(int id, const Rat& q, const Rat& s);

// Raw (a,b,c,d,e,f) of the explicit solution family at n.
std::array<Int, 6> closed_form_family_raw(const Int& n);
HexaSolution closed_form_family(const Int& n);

// Scales a rational surface point to an integer quadruple with content 1.
std::array<Int, 4> clear_to_integers(const SurfacePoint& pt);

// Reads (p,q) and (r,s) parameters with lambda = mu = 1 off an integer
// surface point; nullopt when a coordinate vanishes or a pair degenerates.
std::optional<HexaSolution> solution_from_surface_point(const SurfacePoint& pt);

struct AffinePoint3 {
  Rat x, y, z;
};

// Curve (2) dehomogenized with respect to the last coordinate, t = q/s:
// (-3t/(16t^4+1), t, (1-8t^4)/(16t^4+1)).
AffinePoint3 dehomogenize_curve2(const Rat& t);

// 8x^4 + 8z^4 + 4z^3 - 6z^2 - 5z - 1 at the (x,z) projection of
// dehomogenize_curve2(t); identically zero.
Rat projection_residual(const Rat& t);

// 2(x^2-y^2)xy - (z^2-1)z, the surface dehomogenized at s = 1.
Rat affine_surface_value(const Rat& x, const Rat& y, const Rat& z);

}  // namespace hexaforge
