#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace hexaforge {

// Six integer lengths of a perfect hexahedron: rectangle sides a, b with
// diagonal c; trapezoid slant side e and diagonal d; space diagonal f.
// Canonical form keeps a < b and e < f.
struct HexaSolution {
  Int a, b, c, d, e, f;

  friend bool operator==(const HexaSolution& x, const HexaSolution& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d &&
           x.e == y.e && x.f == y.f;
  }
};

// lexicographic on (a,b,c,d,e,f)
bool lex_less(const HexaSolution& x, const HexaSolution& y);

struct EquationCheck {
  std::string equation;
  Int lhs, rhs;
  bool ok;
};

struct VerifyReport {
  bool valid = false;
  std::array<EquationCheck, 3> checks;

  std::vector<EquationCheck> failures() const;
  std::string describe() const;  // one line per failed equation
};

// Checks the three defining equations exactly; never throws for positive
// inputs, the report lists every failing equation.
VerifyReport verify_solution(const Int& a, const Int& b, const Int& c,
                             const Int& d, const Int& e, const Int& f);

// Sorts (a,b) and (e,f) ascending, then verifies.  Throws
// Error(not_a_solution) carrying the verification report text on failure.
HexaSolution canonicalize(const Int& a, const Int& b, const Int& c,
                          const Int& d, const Int& e, const Int& f);

// a*b/2, exact.
Int size_of(const HexaSolution& sol);

struct DivisibilityReport {
  bool ab_by3, ab_by4, ab_by5;  // divisibility of a*b
  bool size_by4, size_by60;     // divisibility of a*b/2

  bool divisible_by_60() const { return size_by60; }
};

DivisibilityReport size_divisibility(const HexaSolution& sol);

// Divides all six lengths by their gcd; returns the reduced solution and
// the scale that was removed.
std::pair<HexaSolution, Int> primitive_reduce(const HexaSolution& sol);

// True iff the two sextuples are proportional.
bool similar(const HexaSolution& s1, const HexaSolution& s2);

}  // namespace hexaforge
