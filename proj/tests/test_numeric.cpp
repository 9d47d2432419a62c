#include <doctest.h>

#include "numeric.hpp"

using namespace hexaforge;

TEST_CASE("integer parsing is strict") {
  CHECK(parse_int("60") == 60);
  CHECK(parse_int("-7") == -7);
  CHECK(parse_int("+12") == 12);
  CHECK(parse_int("123456789012345678901234567890") ==
        Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_int(""), Error);
  CHECK_THROWS_AS(parse_int("1 2"), Error);
  CHECK_THROWS_AS(parse_int("2.5"), Error);
  CHECK_THROWS_AS(parse_int("abc"), Error);
  CHECK_THROWS_AS(parse_int("1/2"), Error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("1/5") == Rat(1, 5));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(parse_rat("7") == 7);
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
}

TEST_CASE("perfect squares and isqrt") {
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(289)));
  CHECK_FALSE(is_perfect_square(Int(288)));
  CHECK_FALSE(is_perfect_square(Int(-4)));
  CHECK(isqrt(Int(288)) == 16);
}

TEST_CASE("squarefree split") {
  auto [u, w] = squarefree_split(Int(147));  // 147 = 7^2 * 3
  CHECK(u == 7);
  CHECK(w == 3);

  auto [u2, w2] = squarefree_split(Int(1));
  CHECK(u2 == 1);
  CHECK(w2 == 1);

  auto [u3, w3] = squarefree_split(Int(604800));  // 2^7 3^3 5^2 7
  CHECK(u3 * u3 * w3 == 604800);
  CHECK(w3 == 2 * 3 * 7);

  // large semiprime square times squarefree tail
  Int p("1000003"), q("1000033");
  Int n = p * p * q * q * 5;
  auto [u4, w4] = squarefree_split(n);
  CHECK(u4 == p * q);
  CHECK(w4 == 5);
}

TEST_CASE("decimal rendering with significant digits") {
  CHECK(decimal_string(Rat(1, 2), 3) == "0.5");
  CHECK(decimal_string(Rat(-4), 12) == "-4");
  CHECK(decimal_string(Rat(1, 3), 5) == "0.33333");
  CHECK(decimal_sqrt_string(Rat(49, 2), 3) == "4.95");
  CHECK(decimal_sqrt_string(Rat(49, 2), 12) == "4.94974746831");
  CHECK_THROWS_AS(decimal_string(Rat(1), 0), Error);
  CHECK_THROWS_AS(decimal_sqrt_string(Rat(-1), 5), Error);
}
