// Anti-canonical cycles of rational curves on a rational surface and the
// Zariski decomposition of divisors supported on them.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anticanon/pic0.hpp"
#include "anticanon/qform.hpp"
#include "anticanon/rational.hpp"

namespace anticanon {

/// A cycle C = C₁ + … + C_m. Components i and i+1 (mod m) meet once; m = 2
/// means C₁C₂ = 2 and m = 1 is a nodal rational curve. A real structure pairs
/// index i with i + k (m = 2k), i.e. the order C₁…C_k, C̄₁…C̄_k.
struct CycleConfig {
  std::vector<std::int64_t> self_ints;
  std::optional<std::size_t> real_k;
  /// Number of CP² summands of the ambient twistor base; present iff real.
  std::optional<std::int64_t> n;

  static CycleConfig plain(std::vector<std::int64_t> self_ints) { return {std::move(self_ints), {}, {}}; }
  /// Mirrors `half` onto the conjugate components.
  static CycleConfig real(const std::vector<std::int64_t>& half, std::optional<std::int64_t> n);

  std::size_t size() const noexcept { return self_ints.size(); }
  bool is_real() const noexcept { return real_k.has_value(); }
  /// Index of the conjugate component (the index itself when not real).
  std::size_t conjugate(std::size_t i) const;

  friend bool operator==(const CycleConfig&, const CycleConfig&) = default;
};

struct Diagnostic {
  std::string invariant;
  std::string message;
};

/// Checks every CycleConfig invariant; empty result means valid.
std::vector<Diagnostic> validate(const CycleConfig& c);
/// Throws ValidationError carrying the diagnostics.
void require_valid(const CycleConfig& c);

SymMatrix intersection_matrix(const CycleConfig& c);

/// C² (= K² since C is anti-canonical).
std::int64_t canonical_square(const CycleConfig& c);

/// Rational divisor Σ rᵢ Cᵢ on the cycle components.
struct QDivisor {
  RationalVector coeffs;

  static QDivisor zero(std::size_t m) { return {RationalVector(m, 0)}; }
  static QDivisor all_ones(std::size_t m) { return {RationalVector(m, 1)}; }
  static QDivisor from_integers(const std::vector<std::int64_t>& v);

  std::size_t size() const noexcept { return coeffs.size(); }
  bool is_zero() const;
  bool is_integral() const;
  bool is_effective() const;

  QDivisor operator+(const QDivisor& o) const;
  QDivisor operator-(const QDivisor& o) const;
  QDivisor operator*(const Rational& s) const;

  friend bool operator==(const QDivisor&, const QDivisor&) = default;
};

std::string to_string(const QDivisor& d);

/// D·Cᵢ for every component.
RationalVector component_degrees(const CycleConfig& c, const QDivisor& d);
/// D².
Rational self_intersection(const CycleConfig& c, const QDivisor& d);

struct ZariskiDecomposition {
  QDivisor p;
  QDivisor n_part;
  /// Least positive integer with m₀P integral; absent iff P = 0.
  std::optional<std::int64_t> m0;
  /// Coefficients of m₀P; empty iff P = 0.
  std::vector<std::int64_t> l;
  /// P².
  Rational d;
  /// Components with positive coefficient in N.
  std::vector<std::size_t> negative_support;

  friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

/// Lists every violated defining condition of C = P + N (empty when certified).
/// Nefness is checked against the cycle components, the only curves visible here.
std::vector<std::string> certify_decomposition(const CycleConfig& c, const QDivisor& divisor,
                                               const QDivisor& p, const QDivisor& n_part);

/// Grows the negative support one component at a time (least violating index
/// first), then certifies. `divisor` defaults to C; it must be effective.
/// Throws CertificationError if the result does not certify.
ZariskiDecomposition zariski_decompose(const CycleConfig& c,
                                       const std::optional<QDivisor>& divisor = std::nullopt);

/// Enumerates all 2^m candidate supports and returns the unique certified
/// decomposition. Requires m <= 12. Throws CertificationError if the number of
/// distinct certified candidates is not exactly one.
ZariskiDecomposition zariski_oracle(const CycleConfig& c,
                                    const std::optional<QDivisor>& divisor = std::nullopt);

/// (m₀, l). Throws PreconditionError when P = 0.
std::pair<std::int64_t, std::vector<std::int64_t>> m0_coefficients(const ZariskiDecomposition& z);

Rational degree(const ZariskiDecomposition& z);

enum class Kodaira { zero, one, two, needs_order };

std::string_view to_string(Kodaira k);

/// Anti-Kodaira dimension from the decomposition of C and, when P ≠ 0 and
/// P² = 0, the order of m₀P|_C in Pic⁰(C).
Kodaira classify_kodaira(const CycleConfig& c, const std::optional<Order>& order_info = std::nullopt);

/// χ(𝒪(D)) = 1 + (D² + D·C)/2 with K = −C. Throws PreconditionError for a
/// non-integral D or a non-integral result.
std::int64_t riemann_roch_chi(const CycleConfig& c, const QDivisor& d);

/// Stored n, else (8 − C²)/2 when that is a non-negative integer.
std::optional<std::int64_t> ambient_n(const CycleConfig& c);

}  // namespace anticanon
