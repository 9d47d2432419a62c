#include "surface.hpp"

#include <algorithm>

namespace hexaforge {

Rat quartic_form(const Rat& p, const Rat& q, const Rat& r, const Rat& s) {
  return 2 * (sq(p) - sq(q)) * p * q - (sq(r) - sq(s)) * r * s;
}

namespace {

void check_slice(const PlaneSlice& slice) {
  if (slice.q0 == 0 || slice.s0 == 0)
    throw Error(ErrorKind::argument, "slice coordinates q0, s0 must be nonzero");
}

bool on_slice_surface(const PlaneSlice& slice, const SlicePoint& pt) {
  return quartic_form(pt.x, slice.q0, pt.y, slice.s0) == 0;
}

}  // namespace

std::array<SlicePoint, 9> trivial_points(const PlaneSlice& slice) {
  check_slice(slice);
  std::array<SlicePoint, 9> out;
  const Rat xs[3] = {-slice.q0, Rat(0), slice.q0};
  const Rat ys[3] = {-slice.s0, Rat(0), slice.s0};
  int k = 0;
  for (const Rat& x : xs)
    for (const Rat& y : ys) out[k++] = {x, y};
  return out;
}

SlicePoint chord_intersect(const PlaneSlice& slice, const SlicePoint& p1,
                           const SlicePoint& p2) {
  check_slice(slice);
  if (p1 == p2)
    throw Error(ErrorKind::argument, "chord endpoints must be distinct");
  if (!on_slice_surface(slice, p1) || !on_slice_surface(slice, p2))
    throw Error(ErrorKind::argument, "chord endpoints must lie on the surface");

  // With q = q0 and s = s0 fixed the quartic restricts to the cubic
  //   G(x, y) = 2 q0 x^3 - 2 q0^3 x - s0 y^3 + s0^3 y.
  // Substituting the line (x, y) = p1 + t (p2 - p1) gives a cubic in t with
  // known roots t = 0 and t = 1.
  const Rat dx = p2.x - p1.x;
  const Rat dy = p2.y - p1.y;
  const Rat q0 = slice.q0, s0 = slice.s0;

  const Rat c3 = 2 * q0 * dx * sq(dx) - s0 * dy * sq(dy);
  const Rat c2 = 3 * (2 * q0 * p1.x * sq(dx) - s0 * p1.y * sq(dy));
  const Rat c1 = 2 * q0 * (3 * sq(p1.x) * dx - sq(q0) * dx) -
                 s0 * (3 * sq(p1.y) * dy - sq(s0) * dy);
  // c0 = G(p1) = 0.  Deflating by t and (t - 1) leaves c3*t + (c2 + c3);
  // the division is exact because c1 + c2 + c3 = G(p2) - c0 = 0.

  if (c3 == 0)
    throw Error(ErrorKind::at_infinity,
                "chord meets the surface again at its points at infinity");
  const Rat t = -(c2 + c3) / c3;
  SlicePoint out{p1.x + t * dx, p1.y + t * dy};

  if (quartic_form(out.x, slice.q0, out.y, slice.s0) != 0)
    throw std::logic_error("chord_intersect: deflated root left the surface");

  for (const SlicePoint& triv : trivial_points(slice))
    if (out == triv)
      throw Error(ErrorKind::at_infinity,
                  "chord meets the surface again at its points at infinity "
                  "(line through three trivial points)");
  return out;
}

SurfacePoint curve_family(int id, const Rat& q, const Rat& s) {
  if (id < 1 || id > 6)
    throw Error(ErrorKind::argument, "curve family id must be in 1..6");
  if (q == 0 || s == 0)
    throw Error(ErrorKind::argument, "curve family parameters q, s must be nonzero");
  const Rat q4 = sq(sq(q)), s4 = sq(sq(s));
  switch (id) {
    case 1:
      return {3 * q * s4, q * (16 * q4 - s4), s * (s4 + 8 * q4), s * (16 * q4 - s4)};
    case 2:
      return {-3 * q * s4, q * (16 * q4 + s4), s * (s4 - 8 * q4), s * (16 * q4 + s4)};
    case 3:
      return {-q * (q4 + 2 * s4), q * (q4 - 4 * s4), -3 * q4 * s, s * (q4 - 4 * s4)};
    case 4:
      return {q * (q4 - 2 * s4), q * (q4 + 4 * s4), -3 * q4 * s, s * (q4 + 4 * s4)};
    case 5:
      return {2 * q * (s4 - q4), q * (2 * q4 + s4), s * (4 * q4 - s4), s * (2 * q4 + s4)};
    case 6:
      return {2 * q * (s4 + q4), q * (2 * q4 - s4), s * (s4 + 4 * q4), s * (2 * q4 - s4)};
  }
  return {};  // unreachable
}

std::array<Int, 6> closed_form_family_raw(const Int& n) {
  if (n < 1)
    throw Error(ErrorKind::argument, "family index n must be >= 1 (n = 0 degenerates to a = 0)");
  const Int n2 = sq(n), n4 = sq(n2), n8 = sq(n4);
  Int a = 48 * n4 * (4 * n4 + 1);
  Int b = 2 * (8 * n4 - 1) * (16 * n4 + 1);
  Int c = 2 + 16 * n4 + 320 * n8;
  Int e = 2 * n2 * (128 * n8 - 32 * n4 - 7);
  Int f = 2 * n2 * (128 * n8 + 64 * n4 - 1);
  Int d = 2 * n2 * (128 * n8 + 16 * n4 + 5);
  return {a, b, c, d, e, f};
}

HexaSolution closed_form_family(const Int& n) {
  auto [a, b, c, d, e, f] = closed_form_family_raw(n);
  return canonicalize(a, b, c, d, e, f);
}

std::array<Int, 4> clear_to_integers(const SurfacePoint& pt) {
  Int l = 1;
  for (const Rat* v : {&pt.p, &pt.q, &pt.r, &pt.s}) {
    Int den = v->get_den();
    l = l / gcd(l, den) * den;
  }
  std::array<Int, 4> out;
  const Rat* vs[4] = {&pt.p, &pt.q, &pt.r, &pt.s};
  for (int i = 0; i < 4; ++i) {
    Rat scaled = *vs[i] * l;
    out[i] = scaled.get_num();  // denominator is 1 by construction
  }
  Int content = gcd(gcd(out[0], out[1]), gcd(out[2], out[3]));
  if (content > 1)
    for (Int& v : out) v /= content;
  return out;
}

std::optional<HexaSolution> solution_from_surface_point(const SurfacePoint& pt) {
  if (quartic_form(pt.p, pt.q, pt.r, pt.s) != 0)
    throw Error(ErrorKind::argument, "point does not lie on the surface");
  auto [p, q, r, s] = clear_to_integers(pt);
  if (p == 0 || q == 0 || r == 0 || s == 0) return std::nullopt;
  if (p == q || p == -q || r == s || r == -s) return std::nullopt;
  return assemble_solution(RectParams{r, s, 1}, TrapParams{p, q, 1});
}

AffinePoint3 dehomogenize_curve2(const Rat& t) {
  const Rat den = 16 * sq(sq(t)) + 1;
  return {-3 * t / den, t, (1 - 8 * sq(sq(t))) / den};
}

Rat projection_residual(const Rat& t) {
  AffinePoint3 pt = dehomogenize_curve2(t);
  const Rat x = pt.x, z = pt.z;
  return 8 * sq(sq(x)) + 8 * sq(sq(z)) + 4 * z * sq(z) - 6 * sq(z) - 5 * z - 1;
}

Rat affine_surface_value(const Rat& x, const Rat& y, const Rat& z) {
  return 2 * (sq(x) - sq(y)) * x * y - (sq(z) - 1) * z;
}

}  // namespace hexaforge
