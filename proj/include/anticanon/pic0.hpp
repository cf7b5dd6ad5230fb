// Pic⁰ of a cycle of rational curves, identified with C* and represented
// exactly as modulus · exp(2πi · angle) with rational modulus and angle.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anticanon/rational.hpp"

namespace anticanon {

class PicZeroElement {
 public:
  /// Throws std::invalid_argument when modulus <= 0. Angle is reduced mod 1.
  PicZeroElement(Rational modulus, Rational angle);

  static PicZeroElement identity() { return {1, 0}; }
  static PicZeroElement root_of_unity(Rational angle) { return {1, std::move(angle)}; }

  const Rational& modulus() const noexcept { return modulus_; }
  /// In [0, 1), lowest terms.
  const Rational& angle() const noexcept { return angle_; }
  bool is_identity() const { return modulus_ == 1 && angle_ == 0; }

  friend bool operator==(const PicZeroElement&, const PicZeroElement&) = default;

 private:
  Rational modulus_;
  Rational angle_;
};

std::string to_string(const PicZeroElement& e);

/// Order of an element: finite(τ) or infinite.
class Order {
 public:
  static Order finite(std::int64_t tau) { return Order(tau); }
  static Order infinite() { return Order(std::nullopt); }

  bool is_finite() const noexcept { return tau_.has_value(); }
  /// Requires is_finite().
  std::int64_t tau() const { return tau_.value(); }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  explicit Order(std::optional<std::int64_t> tau) : tau_(tau) {}
  std::optional<std::int64_t> tau_;
};

std::string to_string(const Order& o);

Order order(const PicZeroElement& e);
PicZeroElement power(const PicZeroElement& e, std::int64_t j);

/// The family λ ↦ 𝒫_λ over the smooth locus of the pencil base.
class PicZeroFamily {
 public:
  static PicZeroFamily constant(PicZeroElement e) { return PicZeroFamily(std::move(e)); }
  /// Samples are optional witnesses of non-constancy.
  static PicZeroFamily nonconstant(std::vector<PicZeroElement> samples = {}) {
    return PicZeroFamily(std::move(samples));
  }

  bool is_constant() const noexcept { return constant_.has_value(); }
  /// Requires is_constant().
  const PicZeroElement& element() const { return constant_.value(); }
  const std::vector<PicZeroElement>& samples() const noexcept { return samples_; }

  friend bool operator==(const PicZeroFamily&, const PicZeroFamily&) = default;

 private:
  explicit PicZeroFamily(PicZeroElement e) : constant_(std::move(e)) {}
  explicit PicZeroFamily(std::vector<PicZeroElement> s) : samples_(std::move(s)) {}

  std::optional<PicZeroElement> constant_;
  std::vector<PicZeroElement> samples_;
};

enum class FamilyProfileKind { constant_finite, constant_infinite, nonconstant };

std::string_view to_string(FamilyProfileKind kind);

struct FamilyProfile {
  FamilyProfileKind kind;
  std::optional<std::int64_t> tau;  // set iff constant_finite

  friend bool operator==(const FamilyProfile&, const FamilyProfile&) = default;
};

/// A nonconstant continuous family in C* passes through infinite-order
/// points, so nonconstant families are reported as such without sampling.
/// Throws PreconditionError for a nonconstant family whose samples are all equal.
FamilyProfile family_profile(const PicZeroFamily& f);

}  // namespace anticanon
