// Test-only oracles, independent of the parameterization path under test.
#pragma once

#include <vector>

#include "core.hpp"

namespace hexaforge::testing {

// Direct Diophantine scan: every (a,b) with ab <= 2*max_size and integral c,
// then every factor pair of ab giving integers (d,e) with f^2 = d^2 + ab a
// perfect square.  No divisibility-by-60 assumption anywhere.
inline std::vector<HexaSolution> brute_force_scan(const Int& max_size) {
  std::vector<HexaSolution> out;
  const Int ab_limit = 2 * max_size;
  for (Int a = 1; a * (a + 1) <= ab_limit; ++a) {
    for (Int b = a + 1; a * b <= ab_limit; ++b) {
      const Int ab = a * b;
      const Int c_sq = a * a + b * b;
      if (!is_perfect_square(c_sq)) continue;
      const Int c = isqrt(c_sq);
      // d - e = u, d + e = v with u v = ab, u < v, u = v (mod 2)
      for (Int u = 1; u * u < ab; ++u) {
        if (ab % u != 0) continue;
        const Int v = ab / u;
        if ((v - u) % 2 != 0) continue;
        const Int d = (u + v) / 2;
        const Int e = (v - u) / 2;
        if (e < 1) continue;
        const Int f_sq = d * d + ab;
        if (!is_perfect_square(f_sq)) continue;
        out.push_back(HexaSolution{a, b, c, d, e, isqrt(f_sq)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const HexaSolution& x, const HexaSolution& y) {
    Int sx = x.a * x.b, sy = y.a * y.b;
    if (sx != sy) return sx < sy;
    return lex_less(x, y);
  });
  return out;
}

}  // namespace hexaforge::testing
