#include <doctest.h>

#include <random>

#include "parameterize.hpp"

using namespace hexaforge;

TEST_CASE("pyth_from_params") {
  CHECK(pyth_from_params(2, 1, 1) == PythTriple{3, 4, 5});
  CHECK(pyth_from_params(4, 1, 1) == PythTriple{15, 8, 17});
  CHECK(pyth_from_params(3, 2, 1) == PythTriple{5, 12, 13});
  CHECK_THROWS_AS(pyth_from_params(3, 3, 1), Error);
  CHECK_THROWS_AS(pyth_from_params(3, -3, 1), Error);
  CHECK_THROWS_AS(pyth_from_params(0, 0, 1), Error);
  CHECK_THROWS_AS(pyth_from_params(2, 1, 0), Error);
}

TEST_CASE("rect_sides") {
  CHECK(rect_sides({4, 1, 1}) == std::array<Int, 3>{15, 8, 17});
  CHECK(rect_sides({5, 1, 1}) == std::array<Int, 3>{24, 10, 26});
  CHECK(rect_sides({3, 2, 2}) == std::array<Int, 3>{10, 24, 26});
  auto [a, b, c] = rect_sides({-7, 3, 2});
  CHECK(sq(a) + sq(b) == sq(c));
  CHECK_THROWS_AS(rect_sides({3, 0, 1}), Error);
  CHECK_THROWS_AS(rect_sides({3, 3, 1}), Error);
}

TEST_CASE("trap_sides") {
  CHECK(trap_sides({3, 2, 1}) == std::array<Int, 3>{7, 17, 13});
  CHECK(trap_sides({4, 1, 1}) == std::array<Int, 3>{7, 23, 17});
  CHECK(trap_sides({2, 1, 1}) == std::array<Int, 3>{1, 7, 5});
  auto [e, f, d] = trap_sides({5, -8, 3});
  CHECK(sq(e) + sq(f) == 2 * sq(d));
  CHECK(e < f);
}

TEST_CASE("lift and project examples") {
  CHECK(lift_to_twosquare({3, 4, 5}) == TwoSquareTriple{-1, 7, 5});
  CHECK(lift_to_twosquare({4, 3, 5}) == TwoSquareTriple{1, 7, 5});
  CHECK(lift_to_twosquare({5, 12, 13}) == TwoSquareTriple{-7, 17, 13});
  CHECK(project_to_pyth({1, 7, 5}) == PythTriple{4, 3, 5});
  CHECK(project_to_pyth({-7, 17, 13}) == PythTriple{5, 12, 13});
  CHECK(project_to_pyth({7, 17, 13}) == PythTriple{12, 5, 13});
  CHECK_THROWS_AS(lift_to_twosquare({3, 4, 6}), Error);
  CHECK_THROWS_AS(project_to_pyth({1, 7, 6}), Error);
}

TEST_CASE("bijection round-trip on random triples") {
  std::mt19937_64 rng(7);
  auto pick = [&](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
  };
  int done = 0;
  while (done < 200) {
    Int m = pick(-40, 40), n = pick(-40, 40);
    if (m == n || m == -n) continue;
    Int scale = pick(1, 10);
    PythTriple t = pyth_from_params(m, n, scale);
    if (done % 3 == 1) std::swap(t.x, t.y);
    if (done % 5 == 2) t.x = -t.x;
    if (done % 7 == 3) t.y = -t.y;
    // exact inverse, which is stronger than equality up to leg swap/sign
    CHECK(project_to_pyth(lift_to_twosquare(t)) == t);
    TwoSquareTriple w = lift_to_twosquare(t);
    CHECK(lift_to_twosquare(project_to_pyth(w)) == w);
    ++done;
  }
}

TEST_CASE("assemble_solution on the two smallest solutions") {
  CHECK(assemble_solution({4, 1, 1}, {3, 2, 1}) ==
        HexaSolution{8, 15, 17, 13, 7, 17});
  CHECK(assemble_solution({5, 1, 1}, {4, 1, 1}) ==
        HexaSolution{10, 24, 26, 17, 7, 23});
}

TEST_CASE("assemble_solution reports incompatible sizes") {
  try {
    assemble_solution({2, 1, 1}, {3, 2, 1});
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::mismatch);
    CHECK(std::string(e.what()).find("6") != std::string::npos);
    CHECK(std::string(e.what()).find("60") != std::string::npos);
  }
}

// (p^2+q^2)^2 - (p^2-q^2-2pq)^2 factors as 2q(p+q) * 2p(p-q), so both gaps
// equal 4pq(p^2-q^2)mu^2 in absolute value: twice the compatibility side
// 2pq(p^2-q^2)mu^2, which is why ab = d^2 - e^2 when the sizes match.
TEST_CASE("trapezoid side identity d^2 - e^2 = f^2 - d^2 = 4pq(p^2-q^2)mu^2") {
  std::mt19937_64 rng(11);
  auto pick = [&](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
  };
  int done = 0;
  while (done < 100) {
    Int p = pick(-20, 20), q = pick(-20, 20);
    if (p == 0 || q == 0 || p == q || p == -q) continue;
    Int mu = pick(1, 6);
    auto [e, f, d] = trap_sides({p, q, mu});
    Int expected = abs(4 * p * q * (sq(p) - sq(q))) * sq(mu);
    CHECK(sq(d) - sq(e) == expected);
    CHECK(sq(f) - sq(d) == expected);
    ++done;
  }
}

TEST_CASE("assembled solutions verify over a sampled parameter grid") {
  // pairs built from a common product so the compatibility equation holds:
  // rect (r,s) with lambda^2 scaling vs trap (p,q) with matching mu
  int checked = 0;
  for (long r = 2; r <= 9; ++r) {
    for (long s = 1; s < r; ++s) {
      Int rect = Int(r) * s * (Int(r) * r - Int(s) * s);
      for (long p = 2; p <= 9; ++p) {
        for (long q = 1; q < p; ++q) {
          Int trap = 2 * Int(p) * q * (Int(p) * p - Int(q) * q);
          // scale both sides to a common multiple when the ratio is square
          Int g = gcd(rect, trap);
          Int ru = trap / g, tu = rect / g;
          if (!is_perfect_square(ru) || !is_perfect_square(tu)) continue;
          RectParams rp{r, s, isqrt(ru)};
          TrapParams tp{p, q, isqrt(tu)};
          HexaSolution sol = assemble_solution(rp, tp);
          CHECK(verify_solution(sol.a, sol.b, sol.c, sol.d, sol.e, sol.f).valid);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 10);
}
