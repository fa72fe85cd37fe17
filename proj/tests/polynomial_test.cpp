#include <catch2/catch_amalgamated.hpp>

#include "vpf/polynomial.hpp"

using vpf::Integer;
using vpf::MultiIndex;
using vpf::Rational;
using vpf::RatVec;
using vpf::RPoly;

namespace {

Rational rat(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

RPoly mono2(const MultiIndex& u, const Rational& c) {
  RPoly p(2);
  p.add_term(u, c);
  return p;
}

}  // namespace

TEST_CASE("monomial enumeration is lexicographic and complete", "[polynomial]") {
  auto ms = vpf::monomials_of_degree(2, 2);
  REQUIRE(ms == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(vpf::monomials_of_degree(3, 4).size() == 15);
  REQUIRE(vpf::monomials_of_degree(2, 0) == std::vector<MultiIndex>{{0, 0}});
}

TEST_CASE("ring operations", "[polynomial]") {
  RPoly x = mono2({1, 0}, Rational(1));
  RPoly y = mono2({0, 1}, Rational(1));
  RPoly sq = (x + y) * (x + y);
  REQUIRE(sq.coefficient({2, 0}) == Rational(1));
  REQUIRE(sq.coefficient({1, 1}) == Rational(2));
  REQUIRE(sq.coefficient({0, 2}) == Rational(1));
  REQUIRE(sq.total_degree() == 2);
  REQUIRE((sq - sq).is_zero());
  REQUIRE(sq.homogeneous_component(2) == sq);
  REQUIRE(sq.homogeneous_component(1).is_zero());

  // Cancellation prunes stored terms.
  RPoly z = x - x;
  REQUIRE(z.is_zero());
  REQUIRE(z.terms().empty());
}

TEST_CASE("evaluation at rational points", "[polynomial]") {
  RPoly p = mono2({2, 1}, rat(1, 3));
  REQUIRE(p.evaluate(RatVec{Rational(2), rat(3, 2)}) == Rational(2));
  REQUIRE(p.evaluate(vpf::IntVec{3, 2}) == Rational(6));
}

TEST_CASE("derivatives", "[polynomial]") {
  RPoly p = mono2({2, 1}, Rational(1));  // x1^2 x2
  REQUIRE(p.partial(0) == mono2({1, 1}, Rational(2)));
  REQUIRE(p.partial(1) == mono2({2, 0}, Rational(1)));
  // D along (2,1): 4 x1 x2 + x1^2.
  RPoly d = p.dir_derivative(vpf::IntVec{2, 1});
  REQUIRE(d == mono2({1, 1}, Rational(4)) + mono2({2, 0}, Rational(1)));
  // Iterated partials.
  RPoly q = mono2({2, 2}, Rational(1));
  REQUIRE(q.d_pow({1, 1}) == mono2({1, 1}, Rational(4)));
  REQUIRE(q.d_pow({3, 0}).is_zero());
}

TEST_CASE("truncated product matches full product below the cut", "[polynomial]") {
  RPoly a = mono2({1, 0}, Rational(1)) + mono2({0, 1}, Rational(2)) +
            mono2({0, 0}, Rational(1));
  RPoly b = mono2({1, 1}, rat(1, 2)) + mono2({1, 0}, Rational(3));
  RPoly full = a * b;
  RPoly cut = a.mul_truncated(b, 2);
  REQUIRE(cut == full.truncate_above(2));
}

TEST_CASE("homogeneous interpolation recovers exact coefficients", "[polynomial]") {
  RPoly target = mono2({2, 0}, Rational(1)) + mono2({1, 1}, rat(-1, 2));
  std::vector<std::pair<RatVec, Rational>> samples;
  for (auto& pt : std::vector<RatVec>{{Rational(1), Rational(0)},
                                      {Rational(0), Rational(1)},
                                      {Rational(1), Rational(1)},
                                      {Rational(2), Rational(1)},
                                      {Rational(1), Rational(3)}})
    samples.emplace_back(pt, target.evaluate(pt));
  REQUIRE(vpf::interpolate_homogeneous(2, 2, samples) == target);
}

TEST_CASE("interpolation failure modes", "[polynomial]") {
  // Collinear samples cannot pin down a degree-1 form in two variables.
  std::vector<std::pair<RatVec, Rational>> collinear = {
      {{Rational(1), Rational(1)}, Rational(2)},
      {{Rational(2), Rational(2)}, Rational(4)},
      {{Rational(3), Rational(3)}, Rational(6)},
  };
  REQUIRE_THROWS_AS(vpf::interpolate_homogeneous(2, 1, collinear),
                    vpf::singular_system_error);

  // Two different values at degree 0 are contradictory.
  std::vector<std::pair<RatVec, Rational>> contradictory = {
      {{Rational(1), Rational(0)}, Rational(1)},
      {{Rational(2), Rational(0)}, Rational(2)},
  };
  REQUIRE_THROWS_AS(vpf::interpolate_homogeneous(2, 0, contradictory),
                    vpf::inconsistent_samples_error);

  std::vector<std::pair<RatVec, Rational>> scarce = {
      {{Rational(1), Rational(0)}, Rational(1)},
  };
  REQUIRE_THROWS_AS(vpf::interpolate_homogeneous(2, 1, scarce), vpf::error);
}

TEST_CASE("box series table in one variable", "[polynomial]") {
  auto table = vpf::box_taylor(1, {{2}, {3}}, 2);
  REQUIRE(table.entry({0}) == Rational(1));
  REQUIRE(table.entry({1}) == rat(-5, 2));
  REQUIRE(table.entry({2}) == rat(11, 3));
}

TEST_CASE("box series table for a two-row matrix", "[polynomial]") {
  std::vector<vpf::IntVec> cols = {{3, 0}, {2, 1}, {1, 2}, {0, 2}};
  auto table = vpf::box_taylor(2, cols, 2);
  // Unit entries are minus half the row sums.
  REQUIRE(table.entry({1, 0}) == Rational(-3));
  REQUIRE(table.entry({0, 1}) == rat(-5, 2));
  REQUIRE(table.entry({2, 0}) == rat(61, 12));
  REQUIRE(table.entry({0, 0}) == Rational(1));
}
