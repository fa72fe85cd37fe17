#include <catch2/catch_amalgamated.hpp>

#include "vpf/truncated_power.hpp"

using vpf::IntMatrix;
using vpf::Integer;
using vpf::Rational;
using vpf::RatVec;
using vpf::RPoly;

namespace {

IntMatrix mex() { return IntMatrix::from_rows({{3, 2, 1, 0}, {0, 1, 2, 2}}); }

Rational rat(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

RatVec pt(long long a, long long b) { return RatVec{Rational(a), Rational(b)}; }

RPoly poly2(std::initializer_list<std::pair<vpf::MultiIndex, Rational>> terms) {
  RPoly p(2);
  for (const auto& [u, c] : terms) p.add_term(u, c);
  return p;
}

}  // namespace

TEST_CASE("values on the three sectors of the example matrix", "[truncpow]") {
  IntMatrix m = mex();
  REQUIRE(vpf::truncated_power(m, pt(10, 1)) == rat(1, 24));
  REQUIRE(vpf::truncated_power(m, pt(3, 3)) == rat(1, 4));
  REQUIRE(vpf::truncated_power(m, pt(1, 4)) == rat(1, 24));
  // Outside the cone the function vanishes.
  REQUIRE(vpf::truncated_power(m, pt(-1, -1)) == Rational(0));
  REQUIRE(vpf::truncated_power(m, pt(5, -1)) == Rational(0));
}

TEST_CASE("square systems give the reciprocal determinant indicator", "[truncpow]") {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {1, 3}});
  REQUIRE(vpf::truncated_power(m, pt(2, 5)) == rat(1, 6));
  REQUIRE(vpf::truncated_power(m, pt(-2, 5)) == Rational(0));
}

TEST_CASE("points on walls are rejected as non generic", "[truncpow]") {
  REQUIRE_THROWS_AS(vpf::truncated_power(mex(), pt(2, 1)), vpf::non_generic_error);
  REQUIRE_THROWS_AS(vpf::truncated_power(mex(), pt(0, 0)), vpf::non_generic_error);
}

TEST_CASE("homogeneity of degree n minus s", "[truncpow]") {
  IntMatrix m = mex();
  RatVec x = pt(3, 3);
  RatVec x3{Rational(9), Rational(9)};
  REQUIRE(vpf::truncated_power(m, x3) == Rational(9) * vpf::truncated_power(m, x));

  RatVec half{rat(3, 2), rat(3, 2)};
  REQUIRE(vpf::truncated_power(m, half) == rat(1, 4) * vpf::truncated_power(m, x));
}

TEST_CASE("recursion order does not change the value", "[truncpow]") {
  IntMatrix m = mex();
  for (auto& x : {pt(10, 1), pt(3, 3), pt(1, 4)}) {
    Rational ref = vpf::truncated_power(m, x);
    REQUIRE(vpf::truncated_power(m, x, {3, 2, 1, 0}) == ref);
    REQUIRE(vpf::truncated_power(m, x, {1, 3, 0, 2}) == ref);
  }
}

TEST_CASE("piecewise polynomials on the example fan", "[truncpow]") {
  IntMatrix m = mex();
  RPoly lower = vpf::truncated_power_polynomial(m, pt(10, 1));
  REQUIRE(lower == poly2({{{0, 2}, rat(1, 24)}}));

  RPoly middle = vpf::truncated_power_polynomial(m, pt(3, 3));
  REQUIRE(middle == poly2({{{1, 1}, rat(1, 18)}, {{2, 0}, rat(-1, 72)}, {{0, 2}, rat(-1, 72)}}));

  RPoly upper = vpf::truncated_power_polynomial(m, pt(1, 4));
  REQUIRE(upper == poly2({{{2, 0}, rat(1, 24)}}));

  REQUIRE_THROWS_AS(vpf::truncated_power_polynomial(m, pt(2, 1)), vpf::non_generic_error);
}

TEST_CASE("piecewise polynomials for a unimodular matrix", "[truncpow]") {
  IntMatrix m = IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  REQUIRE(vpf::truncated_power(m, pt(2, 3)) == Rational(2));
  // Below the diagonal the density is x2; above it is x1.
  REQUIRE(vpf::truncated_power_polynomial(m, pt(3, 1)) == poly2({{{0, 1}, Rational(1)}}));
  REQUIRE(vpf::truncated_power_polynomial(m, pt(1, 3)) == poly2({{{1, 0}, Rational(1)}}));
}

TEST_CASE("one row matrices", "[truncpow]") {
  IntMatrix m = IntMatrix::from_rows({{2, 3}});
  // Density of {(b1,b2) >= 0 : 2b1 + 3b2 = x}, a segment of length x/6
  // against the normalized fiber measure.
  REQUIRE(vpf::truncated_power(m, RatVec{Rational(1)}) == rat(1, 6));
  REQUIRE(vpf::truncated_power_polynomial(m, RatVec{Rational(1)}) ==
          [] {
            RPoly p(1);
            p.add_term({1}, rat(1, 6));
            return p;
          }());
}
