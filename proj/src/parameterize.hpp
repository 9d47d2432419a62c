#pragma once

#include <array>

#include "core.hpp"

namespace hexaforge {

struct PythTriple {
  Int x, y, z;  // x^2 + y^2 = z^2, z > 0
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

struct TwoSquareTriple {
  Int x, y, z;  // x^2 + y^2 = 2 z^2, z > 0
  friend bool operator==(const TwoSquareTriple&, const TwoSquareTriple&) = default;
};

// Generators of the rectangle sides: a = lambda(r^2-s^2), b = 2rs*lambda.
struct RectParams {
  Int r, s, lambda;  // lambda > 0, r != +-s, r,s != 0
};

// Generators of the trapezoid sides: e = mu(p^2-q^2-2pq), f = mu(p^2-q^2+2pq).
struct TrapParams {
  Int p, q, mu;  // mu > 0, p != +-q, p,q != 0
};

// (scale(m^2-n^2), scale*2mn, scale(m^2+n^2)); m != +-n.
PythTriple pyth_from_params(const Int& m, const Int& n, const Int& scale);

// (|lambda(r^2-s^2)|, |2rs*lambda|, lambda(r^2+s^2)), so a^2 + b^2 = c^2.
std::array<Int, 3> rect_sides(const RectParams& rp);

// (|e|, |f|, d) with e < f, so e^2 + f^2 = 2 d^2.
std::array<Int, 3> trap_sides(const TrapParams& tp);

// Multiplication by 1+i: (x, y, z) -> (x-y, x+y, z).
TwoSquareTriple lift_to_twosquare(const PythTriple& t);

// Multiplication by (1-i)/2: (x, y, z) -> ((x+y)/2, (y-x)/2, z).
PythTriple project_to_pyth(const TwoSquareTriple& t);

// Joins a rectangle and a trapezoid generated by compatible parameters:
// |2(p^2-q^2)pq| mu^2 must equal |(r^2-s^2)rs| lambda^2, otherwise
// Error(mismatch) reporting both sides.  Result is canonical and valid.
HexaSolution assemble_solution(const RectParams& rp, const TrapParams& tp);

}  // namespace hexaforge
