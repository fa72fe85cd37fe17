#include <catch2/catch_amalgamated.hpp>

#include "vpf/cyclotomic.hpp"

using vpf::Character;
using vpf::Cyclo;
using vpf::Integer;
using vpf::Rational;

TEST_CASE("euler phi", "[cyclotomic]") {
  REQUIRE(vpf::euler_phi(1) == 1);
  REQUIRE(vpf::euler_phi(2) == 1);
  REQUIRE(vpf::euler_phi(12) == 4);
  REQUIRE(vpf::euler_phi(77) == 60);
}

TEST_CASE("cyclotomic polynomials", "[cyclotomic]") {
  using V = std::vector<Integer>;
  REQUIRE(vpf::cyclotomic_polynomial(1) == V{-1, 1});
  REQUIRE(vpf::cyclotomic_polynomial(2) == V{1, 1});
  REQUIRE(vpf::cyclotomic_polynomial(6) == V{1, -1, 1});
  // x^4 - x^2 + 1
  REQUIRE(vpf::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity multiply by adding exponents", "[cyclotomic]") {
  Cyclo z4 = Cyclo::root_of_unity(4, 1);
  Cyclo z6 = Cyclo::root_of_unity(6, 1);
  REQUIRE(z4 * z6 == Cyclo::root_of_unity(12, 5));
  REQUIRE(Cyclo::root_of_unity(6, 3) == Cyclo::from_rational(Rational(-1)));
  REQUIRE(Cyclo::root_of_unity(5, -1) == Cyclo::root_of_unity(5, 4));
  REQUIRE(Cyclo::root_of_unity(12, 1).pow(-5) == Cyclo::root_of_unity(12, 7));
}

TEST_CASE("all n-th roots sum to zero", "[cyclotomic]") {
  for (int64_t n : {2, 3, 5, 12}) {
    Cyclo sum = Cyclo::from_rational(Rational(0), n);
    for (int64_t k = 0; k < n; ++k) sum += Cyclo::root_of_unity(n, k);
    REQUIRE(sum.is_zero());
  }
}

TEST_CASE("inverses in the cyclotomic field", "[cyclotomic]") {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  Cyclo one = Cyclo::one(4);
  REQUIRE((one - i).inverse() == (one + i) / Rational(2));

  Cyclo w = Cyclo::root_of_unity(3, 1);
  REQUIRE((Cyclo::one(3) - w).inverse() ==
          (Cyclo::from_rational(Rational(2), 3) + w) / Rational(3));

  Cyclo x = Cyclo::from_rational(Rational(2), 5) +
            Cyclo::root_of_unity(5, 1) * Rational(3) + Cyclo::root_of_unity(5, 3);
  REQUIRE(x * x.inverse() == Cyclo::one(5));
  REQUIRE_THROWS_AS(Cyclo::from_rational(Rational(0), 5).inverse(), vpf::error);
}

TEST_CASE("rationality detection", "[cyclotomic]") {
  Cyclo sum = Cyclo::from_rational(Rational(0), 5);
  for (int64_t k = 1; k < 5; ++k) sum += Cyclo::root_of_unity(5, k);
  REQUIRE(sum.is_rational());
  REQUIRE(sum.to_rational() == Rational(-1));
  REQUIRE_FALSE(Cyclo::root_of_unity(5, 1).is_rational());
  REQUIRE_THROWS_AS(Cyclo::root_of_unity(5, 1).to_rational(), vpf::not_rational_error);
}

TEST_CASE("equality compares across moduli via a common lift", "[cyclotomic]") {
  REQUIRE(Cyclo::root_of_unity(2, 1) == Cyclo::root_of_unity(6, 3));
  REQUIRE(Cyclo::root_of_unity(4, 2) == Cyclo::from_rational(Rational(-1), 3));
  REQUIRE(Cyclo::root_of_unity(3, 1) != Cyclo::root_of_unity(4, 1));
  REQUIRE(Cyclo::root_of_unity(6, 1).lifted(12) == Cyclo::root_of_unity(12, 2));
  REQUIRE_THROWS_AS(Cyclo::root_of_unity(6, 1).lifted(9), vpf::error);
}

TEST_CASE("characters pair integer vectors into exponents", "[cyclotomic]") {
  Character theta(12, {0, 6});
  REQUIRE(theta.pairing({2, 1}) == 6);
  REQUIRE(theta.pairing({2, 2}) == 0);
  REQUIRE(theta.pairing({0, -1}) == 6);
  REQUIRE(theta.order() == 2);
  REQUIRE(theta.pow({3, 0}) == Cyclo::one(12));
  REQUIRE(theta.pow({0, 1}) == Cyclo::root_of_unity(12, 6));
  REQUIRE_FALSE(theta.is_identity());
  REQUIRE(Character(1, {0, 0}).is_identity());
  REQUIRE(Character(2, {0, 1}) == Character(12, {0, 6}));
  REQUIRE(Character(12, {0, 6}) != Character(12, {6, 6}));
  REQUIRE(Character(12, {-4, 16}).exponents() == std::vector<int64_t>{8, 4});
}
