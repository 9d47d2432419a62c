#include "core.hpp"

#include <tuple>

namespace hexaforge {

bool lex_less(const HexaSolution& x, const HexaSolution& y) {
  return std::tie(x.a, x.b, x.c, x.d, x.e, x.f) <
         std::tie(y.a, y.b, y.c, y.d, y.e, y.f);
}

std::vector<EquationCheck> VerifyReport::failures() const {
  std::vector<EquationCheck> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c);
  return out;
}

std::string VerifyReport::describe() const {
  if (valid) return "valid";
  std::string out;
  for (const auto& c : failures()) {
    if (!out.empty()) out += "; ";
    out += c.equation + ": " + to_string(c.lhs) + " != " + to_string(c.rhs);
  }
  return out;
}

VerifyReport verify_solution(const Int& a, const Int& b, const Int& c,
                             const Int& d, const Int& e, const Int& f) {
  for (const Int* v : {&a, &b, &c, &d, &e, &f})
    if (*v <= 0)
      throw Error(ErrorKind::argument, "all six lengths must be positive");

  const Int ab = a * b;
  VerifyReport rep;
  rep.checks[0] = {"a^2 + b^2 = c^2", sq(a) + sq(b), sq(c), false};
  rep.checks[1] = {"d^2 = e^2 + a*b", sq(d), sq(e) + ab, false};
  rep.checks[2] = {"f^2 = d^2 + a*b", sq(f), sq(d) + ab, false};
  rep.valid = true;
  for (auto& chk : rep.checks) {
    chk.ok = chk.lhs == chk.rhs;
    rep.valid = rep.valid && chk.ok;
  }
  return rep;
}

HexaSolution canonicalize(const Int& a, const Int& b, const Int& c,
                          const Int& d, const Int& e, const Int& f) {
  HexaSolution sol{a, b, c, d, e, f};
  if (sol.a > sol.b) std::swap(sol.a, sol.b);
  if (sol.e > sol.f) std::swap(sol.e, sol.f);
  VerifyReport rep = verify_solution(sol.a, sol.b, sol.c, sol.d, sol.e, sol.f);
  if (!rep.valid)
    throw Error(ErrorKind::not_a_solution, "not a solution: " + rep.describe());
  return sol;
}

Int size_of(const HexaSolution& sol) {
  Int ab = sol.a * sol.b;
  // a*b is divisible by 4 for every valid solution; rejecting an odd product
  // here guards against uses on unverified sextuples
  if (ab % 2 != 0)
    throw Error(ErrorKind::argument, "a*b is odd; size a*b/2 undefined");
  return ab / 2;
}

DivisibilityReport size_divisibility(const HexaSolution& sol) {
  const Int ab = sol.a * sol.b;
  const Int size = size_of(sol);
  DivisibilityReport rep;
  rep.ab_by3 = ab % 3 == 0;
  rep.ab_by4 = ab % 4 == 0;
  rep.ab_by5 = ab % 5 == 0;
  rep.size_by4 = size % 4 == 0;
  rep.size_by60 = size % 60 == 0;
  return rep;
}

std::pair<HexaSolution, Int> primitive_reduce(const HexaSolution& sol) {
  Int g = gcd(gcd(gcd(sol.a, sol.b), gcd(sol.c, sol.d)), gcd(sol.e, sol.f));
  HexaSolution out{sol.a / g, sol.b / g, sol.c / g,
                   sol.d / g, sol.e / g, sol.f / g};
  return {out, g};
}

bool similar(const HexaSolution& s1, const HexaSolution& s2) {
  return primitive_reduce(s1).first == primitive_reduce(s2).first;
}

}  // namespace hexaforge
