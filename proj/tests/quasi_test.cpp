#include <catch2/catch_amalgamated.hpp>

#include "vpf/oracle.hpp"
#include "vpf/quasi.hpp"

using vpf::Chamber;
using vpf::CharacterData;
using vpf::CPoly;
using vpf::Cyclo;
using vpf::IntMatrix;
using vpf::Integer;
using vpf::IntVec;
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

CharacterData find_char(const IntMatrix& m, const std::vector<int64_t>& exps) {
  for (const auto& cd : m.characters())
    if (cd.theta.exponents() == exps) return cd;
  throw std::logic_error("character not present");
}

}  // namespace

TEST_CASE("signed power sums", "[quasi]") {
  REQUIRE(vpf::signed_power_sum(1, 2, Cyclo::from_rational(Rational(-1))) ==
          Cyclo::one(1));
  REQUIRE(vpf::signed_power_sum(3, 1, Cyclo::one(1)).is_zero());
  Cyclo w = Cyclo::root_of_unity(3, 1);
  REQUIRE(vpf::signed_power_sum(1, 3, w) == -(w + w.pow(2) * Rational(2)));
  REQUIRE(vpf::signed_power_sum(0, 3, w) == Cyclo::from_rational(Rational(-1), 3));
}

TEST_CASE("least repetition order covers the complement columns", "[quasi]") {
  IntMatrix m = mex();
  REQUIRE(vpf::least_r(m, find_char(m, {0, 0})) == 1);
  REQUIRE(vpf::least_r(m, find_char(m, {0, 6})) == 2);
  REQUIRE(vpf::least_r(m, find_char(m, {4, 4})) == 3);
}

TEST_CASE("identity part on the upper chamber of the example", "[quasi]") {
  IntMatrix m = mex();
  Chamber upper = vpf::chamber_of(m, pt(1, 4));
  auto parts = vpf::polynomial_part(m, upper);
  REQUIRE(parts.size() == 3);
  REQUIRE(parts[0] == poly2({{{2, 0}, rat(1, 24)}}));
  REQUIRE(parts[1] == poly2({{{1, 0}, rat(1, 4)}}));
  REQUIRE(parts[2] == poly2({{{0, 0}, rat(47, 144)}}));
}

TEST_CASE("identity part for a coprime pair", "[quasi]") {
  IntMatrix m = IntMatrix::from_rows({{2, 3}});
  auto parts = vpf::polynomial_part(m, vpf::enumerate_chambers(m)[0]);
  REQUIRE(parts.size() == 2);
  RPoly lead(1), next(1);
  lead.add_term({1}, rat(1, 6));
  next.add_term({0}, rat(5, 12));
  REQUIRE(parts[0] == lead);
  REQUIRE(parts[1] == next);
}

TEST_CASE("character part on the upper chamber of the example", "[quasi]") {
  IntMatrix m = mex();
  Chamber upper = vpf::chamber_of(m, pt(1, 4));

  auto sign_part = vpf::character_part(m, upper, find_char(m, {0, 6}));
  REQUIRE(sign_part.size() == 2);
  REQUIRE(sign_part[0] == vpf::promote(poly2({{{1, 0}, rat(1, 12)}})));
  REQUIRE(sign_part[1] == vpf::promote(poly2({{{0, 0}, rat(1, 4)}})));

  // The cube-root character fixes columns spanning a cone that misses the
  // upper chamber, so its part vanishes there.
  auto cube_part = vpf::character_part(m, upper, find_char(m, {4, 4}));
  for (const auto& piece : cube_part) REQUIRE(piece.is_zero());
}

TEST_CASE("identity character part agrees with the rational route", "[quasi]") {
  IntMatrix m = mex();
  Chamber middle = vpf::chamber_of(m, pt(3, 3));
  auto rational_parts = vpf::polynomial_part(m, middle);
  auto cyclo_parts = vpf::character_part(m, middle, find_char(m, {0, 0}));
  REQUIRE(rational_parts.size() == cyclo_parts.size());
  for (size_t i = 0; i < cyclo_parts.size(); ++i)
    REQUIRE(cyclo_parts[i] == vpf::promote(rational_parts[i]));
}

TEST_CASE("quasi polynomial counts on chamber closures", "[quasi]") {
  IntMatrix m = mex();
  for (const auto& ch : vpf::enumerate_chambers(m)) {
    vpf::QuasiPolynomial qp = vpf::quasi_polynomial(m, ch);
    REQUIRE(qp.modulus == 12);
    for (long long a = 0; a <= 12; ++a)
      for (long long b = 0; b <= 12; ++b) {
        if (!vpf::in_closure(qp.arr, qp.chamber.signs, pt(a, b))) continue;
        REQUIRE(qp.evaluate({a, b}) == vpf::brute_count(m, {a, b}));
      }
  }
}

TEST_CASE("quasi polynomial spot values", "[quasi]") {
  IntMatrix m = mex();
  vpf::QuasiPolynomial middle = vpf::quasi_polynomial(m, vpf::chamber_of(m, pt(3, 3)));
  REQUIRE(middle.evaluate({3, 2}) == 1);
  REQUIRE(middle.evaluate({2, 1}) == 1);
  REQUIRE(middle.evaluate({0, 0}) == 1);
  REQUIRE_THROWS_AS(middle.evaluate({10, 1}), vpf::error);

  // Degrees: n - s for the identity, at most n - s - 1 elsewhere.
  for (const auto& [theta, poly] : middle.parts) {
    if (theta.is_identity())
      REQUIRE(poly.total_degree() == 2);
    else
      REQUIRE(poly.total_degree() <= 1);
  }
}

TEST_CASE("backward difference removes one column", "[quasi]") {
  IntMatrix m = mex();
  for (int j = 0; j < m.n(); ++j) {
    std::vector<int> keep;
    for (int i = 0; i < m.n(); ++i)
      if (i != j) keep.push_back(i);
    IntMatrix rest(2, m.columns_subset(keep));
    for (long long a = -2; a <= 9; ++a)
      for (long long b = -2; b <= 9; ++b) {
        IntVec alpha{a, b};
        IntVec prev{a - m.column(j)[0], b - m.column(j)[1]};
        REQUIRE(vpf::brute_count(m, alpha) - vpf::brute_count(m, prev) ==
                vpf::brute_count(rest, alpha));
      }
  }
}

TEST_CASE("reciprocity relates a chamber to its negative shift", "[quasi]") {
  IntMatrix m = mex();
  IntVec sigma{6, 5};  // column sum
  for (const auto& ch : vpf::enumerate_chambers(m)) {
    vpf::QuasiPolynomial qp = vpf::quasi_polynomial(m, ch);
    for (auto& alpha : std::vector<IntVec>{{5, 2}, {0, 0}, {-3, 7}, {11, 4}}) {
      IntVec mirror{-alpha[0] - sigma[0], -alpha[1] - sigma[1]};
      REQUIRE(qp.evaluate_raw(alpha) == qp.evaluate_raw(mirror));
    }
  }
}

TEST_CASE("shortcut assembly for a one prime matrix", "[quasi]") {
  IntMatrix m = IntMatrix::from_rows({{2, 3}});
  Chamber ch = vpf::enumerate_chambers(m)[0];
  vpf::QuasiPolynomial direct = vpf::quasi_polynomial(m, ch);
  vpf::QuasiPolynomial shortcut = vpf::one_prime_quasi_polynomial(m, ch);
  REQUIRE(direct.modulus == shortcut.modulus);
  for (long long n = 0; n <= 30; ++n) {
    Integer expect = vpf::brute_count(m, {n});
    REQUIRE(direct.evaluate({n}) == expect);
    REQUIRE(shortcut.evaluate({n}) == expect);
  }

  REQUIRE_THROWS_AS(vpf::one_prime_quasi_polynomial(mex(), vpf::chamber_of(mex(), pt(3, 3))),
                    vpf::error);
}

TEST_CASE("constant character terms factor over the complement", "[quasi]") {
  // For each character with x^r = 1 and x != 1 the normalized first signed
  // power sum collapses to 1/(1-x); products of the two routes must agree.
  IntMatrix m = mex();
  for (const auto& cd : m.characters()) {
    if (cd.theta.is_identity()) continue;
    int64_t r = vpf::least_r(m, cd);
    Cyclo lhs = Cyclo::one(cd.theta.modulus());
    Cyclo rhs = lhs;
    for (int j : cd.complement) {
      Cyclo x = Cyclo::root_of_unity(cd.theta.modulus(), -cd.theta.pairing(m.column(j)));
      lhs *= vpf::signed_power_sum(1, r, x) * Rational(Integer(1), Integer(r));
      rhs *= (Cyclo::one(cd.theta.modulus()) - x).inverse();
    }
    REQUIRE(lhs == rhs);
  }
}
