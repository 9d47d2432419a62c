#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace hexaforge {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals.  Floating point appears only at the output boundary (decimal
// rendering with a requested number of significant digits).
using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
  argument,         // malformed or out-of-domain input
  not_a_solution,   // the three defining equations do not all hold
  mismatch,         // parameter compatibility equation failed
  not_embeddable,   // h^2 <= 0
  at_infinity,      // chord meets the surface again only at infinity
  degenerate_face,  // 4d^2 <= (a+b)^2, trapezoid height vanishes
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Int sq(const Int& x) { return x * x; }
inline Rat sq(const Rat& x) { return x * x; }

Int gcd(const Int& a, const Int& b);
Int isqrt(const Int& n);  // floor(sqrt(n)), n >= 0
bool is_perfect_square(const Int& n);

// Strict decimal integer: optional sign, digits only.
Int parse_int(const std::string& text);
// "num" or "num/den", both strict decimal; canonicalized, den != 0.
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
// "num" when the denominator is 1, otherwise "num/den".
std::string to_string(const Rat& v);

// n = first^2 * second with second squarefree; n >= 1.
std::pair<Int, Int> squarefree_split(const Int& n);

// Render to `digits` significant decimal digits.
std::string decimal_string(const Rat& v, int digits);
// sqrt(v) to `digits` significant decimal digits; v >= 0.
std::string decimal_sqrt_string(const Rat& v, int digits);

}  // namespace hexaforge
