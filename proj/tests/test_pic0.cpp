#include <numeric>
#include <random>

#include "doctest.h"

#include "anticanon/errors.hpp"
#include "anticanon/pic0.hpp"

using namespace anticanon;

TEST_CASE("orders") {
  CHECK(order(PicZeroElement(1, Rational(1, 6))) == Order::finite(6));
  CHECK(order(PicZeroElement(2, 0)) == Order::infinite());
  CHECK(order(PicZeroElement::identity()) == Order::finite(1));
  CHECK(order(PicZeroElement(Rational(3, 2), Rational(1, 2))) == Order::infinite());
}

TEST_CASE("elements are normalized") {
  PicZeroElement e(1, Rational(7, 3));
  CHECK(e.angle() == Rational(1, 3));
  CHECK(PicZeroElement(1, Rational(-1, 4)).angle() == Rational(3, 4));
  CHECK_THROWS_AS(PicZeroElement(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PicZeroElement(-1, 0), std::invalid_argument);
}

TEST_CASE("powers") {
  CHECK(power(PicZeroElement(1, Rational(1, 6)), 6) == PicZeroElement::identity());
  CHECK(power(PicZeroElement(2, 0), -1) == PicZeroElement(Rational(1, 2), 0));
  CHECK(power(PicZeroElement(1, Rational(1, 6)), 4) == PicZeroElement(1, Rational(2, 3)));
  CHECK(power(PicZeroElement(3, Rational(1, 5)), 0) == PicZeroElement::identity());
  CHECK(power(PicZeroElement(2, Rational(1, 3)), 3) == PicZeroElement(8, 0));
}

TEST_CASE("family profiles") {
  CHECK(family_profile(PicZeroFamily::constant(PicZeroElement(1, Rational(1, 3)))) ==
        FamilyProfile{FamilyProfileKind::constant_finite, 3});
  CHECK(family_profile(PicZeroFamily::constant(PicZeroElement(Rational(3, 2), 0))) ==
        FamilyProfile{FamilyProfileKind::constant_infinite, std::nullopt});
  CHECK(family_profile(PicZeroFamily::nonconstant({PicZeroElement(1, 0), PicZeroElement(2, 0)})).kind ==
        FamilyProfileKind::nonconstant);
  CHECK(family_profile(PicZeroFamily::nonconstant()).kind == FamilyProfileKind::nonconstant);
  CHECK_THROWS_AS(family_profile(PicZeroFamily::nonconstant({PicZeroElement(2, 0), PicZeroElement(2, 0)})),
                  PreconditionError);
}

TEST_CASE("order arithmetic over random roots of unity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const long q = 1 + static_cast<long>(rng() % 40);
    const long p = static_cast<long>(rng() % q);
    const PicZeroElement e(1, Rational(p, q));
    const Order o = order(e);
    REQUIRE(o.is_finite());
    const std::int64_t tau = o.tau();
    CHECK(power(e, tau) == PicZeroElement::identity());
    for (std::int64_t j = 1; j < tau; ++j) CHECK_FALSE(power(e, j).is_identity());
    const std::int64_t j = static_cast<std::int64_t>(rng() % 60) - 30;
    const std::int64_t g = std::gcd(tau, j == 0 ? tau : (j < 0 ? -j : j));
    CHECK(order(power(e, j)) == Order::finite(j == 0 ? 1 : tau / g));
  }
}

TEST_CASE("profile ignores sample order") {
  std::vector<PicZeroElement> s{PicZeroElement(1, 0), PicZeroElement(2, Rational(1, 3)), PicZeroElement(5, 0)};
  do {
    CHECK(family_profile(PicZeroFamily::nonconstant(s)).kind == FamilyProfileKind::nonconstant);
  } while (std::next_permutation(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.modulus() < b.modulus() || (a.modulus() == b.modulus() && a.angle() < b.angle());
  }));
}
