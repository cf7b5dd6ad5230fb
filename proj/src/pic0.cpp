#include "anticanon/pic0.hpp"

#include <stdexcept>

#include "anticanon/errors.hpp"

namespace anticanon {

namespace {

Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace

PicZeroElement::PicZeroElement(Rational modulus, Rational angle)
    : modulus_(std::move(modulus)), angle_(frac(angle)) {
  modulus_.canonicalize();
  if (modulus_ <= 0) throw std::invalid_argument("Pic0 modulus must be positive");
}

std::string to_string(const PicZeroElement& e) {
  return "(" + to_string(e.modulus()) + ", " + to_string(e.angle()) + ")";
}

std::string to_string(const Order& o) {
  return o.is_finite() ? "finite(" + std::to_string(o.tau()) + ")" : "infinite";
}

Order order(const PicZeroElement& e) {
  if (e.modulus() != 1) return Order::infinite();
  return Order::finite(to_int64(Integer(e.angle().get_den())));
}

PicZeroElement power(const PicZeroElement& e, std::int64_t j) {
  Rational mod = 1;
  Rational base = j >= 0 ? e.modulus() : Rational(1 / e.modulus());
  std::uint64_t k = j >= 0 ? static_cast<std::uint64_t>(j) : 0 - static_cast<std::uint64_t>(j);
  while (k > 0) {
    if (k & 1) mod *= base;
    base *= base;
    k >>= 1;
  }
  return PicZeroElement(mod, e.angle() * Rational(static_cast<long>(j)));
}

std::string_view to_string(FamilyProfileKind kind) {
  switch (kind) {
    case FamilyProfileKind::constant_finite: return "constant_finite";
    case FamilyProfileKind::constant_infinite: return "constant_infinite";
    case FamilyProfileKind::nonconstant: return "nonconstant";
  }
  return "nonconstant";
}

FamilyProfile family_profile(const PicZeroFamily& f) {
  if (f.is_constant()) {
    Order o = order(f.element());
    if (o.is_finite()) return {FamilyProfileKind::constant_finite, o.tau()};
    return {FamilyProfileKind::constant_infinite, std::nullopt};
  }
  const auto& s = f.samples();
  if (!s.empty()) {
    bool all_equal = true;
    for (const auto& e : s) all_equal = all_equal && e == s.front();
    if (all_equal)
      throw PreconditionError("nonconstant Pic0 family needs at least two distinct samples");
  }
  return {FamilyProfileKind::nonconstant, std::nullopt};
}

}  // namespace anticanon
