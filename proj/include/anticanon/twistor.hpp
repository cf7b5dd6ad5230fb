// Twistor spaces over nCP² whose fundamental system |F| is a pencil: the
// pencil data, the resolved threefold Z₁ over the reducible fibre λ₁, the
// classes ℳ(r,ρ) = f₁*𝒪(r) + ρ·m₀𝑷, and the algebraic-dimension verdict.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anticanon/cycles.hpp"
#include "anticanon/pic0.hpp"

namespace anticanon {

/// Smooth elliptic base curve; carries the class of its normal bundle in Pic⁰.
struct EllipticBase {
  PicZeroElement normal_bundle;

  friend bool operator==(const EllipticBase&, const EllipticBase&) = default;
};

using PencilBase = std::variant<CycleConfig, EllipticBase>;

/// dim |F| = 1 is assumed, not checked.
struct TwistorPencil {
  std::int64_t n = 4;
  PencilBase base;
  PicZeroFamily family = PicZeroFamily::nonconstant();
  /// One bit per conjugate node pair. Bit 0 at node i: the pair {S_i⁻, E_{i+1}}
  /// is blown up; bit 1: the pair {S_i⁺, E_i}.
  std::vector<int> resolution;

  bool is_elliptic() const noexcept { return std::holds_alternative<EllipticBase>(base); }
  /// Requires a cycle base.
  const CycleConfig& cycle() const { return std::get<CycleConfig>(base); }
  /// Half length k of the real cycle (0 for an elliptic base).
  std::size_t k() const;

  friend bool operator==(const TwistorPencil&, const TwistorPencil&) = default;
};

std::vector<std::string> validate(const TwistorPencil& p);
void require_valid(const TwistorPencil& p);

/// Display name of component `i` (0-based) of the real cycle: C1…Ck, Cbar1…Cbark.
std::string component_name(std::size_t i, std::size_t k);

struct ReducibleFiber {
  std::size_t index;  // i, 1-based
  std::string plus;   // S_i^+
  std::string minus;  // S_i^-
  std::string twistor_line;
  /// The two nodes joined by the real twistor line L_i.
  std::string line_point, conjugate_line_point;
  /// Components of S_i^± ∩ C (0-based indices into the full cycle).
  std::vector<std::size_t> plus_half;
  std::vector<std::size_t> minus_half;
};

/// The k reducible members S_i⁺ + S_i⁻; descriptor i splits C at the nodes
/// Cᵢ ∩ C_{i+1} and its conjugate. Empty for an elliptic base.
std::vector<ReducibleFiber> reducible_fibers(const TwistorPencil& p);

/// Cyclically relabels (respecting reality, rotating resolution bits along)
/// so that l₁ > l₂. Requires K² < 0, P ≠ 0, P² = 0; throws
/// CertificationError if all lᵢ are equal.
TwistorPencil normalize_rotation(const TwistorPencil& p);

/// How a curve of the cycle 𝒞 ⊂ f₁⁻¹(λ₁) ∩ E pairs with ℳ(r, ρ).
enum class PairingRule {
  irreducible_fiber,  // homologous in E_j to a smooth-fibre curve: degree 0
  explicit_pairing,   // degree ρ·Σ l_j (E_j·curve) from listed incidences
  fiber_complement,   // degree minus that of the other component of its fibre
};

struct ModelCurve {
  std::string name;
  /// Full-cycle index j of the divisor E_j whose λ₁-fibre contains the curve.
  std::size_t divisor;
  PairingRule rule;
  /// explicit_pairing: (j, E_j · curve); unlisted divisors are disjoint.
  std::vector<std::pair<std::size_t, std::int64_t>> e_pairings;
  /// fiber_complement: position in the cycle of the other fibre component.
  std::size_t partner = 0;
};

struct ResolvedModel {
  std::size_t k;
  CycleConfig base;
  std::int64_t m0;
  /// Coefficients of m₀P over the full cycle (mirrored).
  std::vector<std::int64_t> l;
  int node1_bit;
  /// 𝒞 in cyclic order: C[1,1], Delta1, C[1,2], …, C[1,k], Cbar[1,1], Deltabar1, …
  std::vector<ModelCurve> cycle;

  std::size_t position(std::string_view name) const;
};

/// Requires a normalized cycle base with k ≥ 2, P ≠ 0, P² = 0.
ResolvedModel build_resolved_model(const TwistorPencil& p);

struct MClass {
  std::int64_t r;
  std::int64_t rho;
};

struct CurveDegree {
  std::string curve;
  std::int64_t degree;

  friend bool operator==(const CurveDegree&, const CurveDegree&) = default;
};

/// ℳ(r, ρ)·X for every curve X of 𝒞, in cycle order. Independent of r.
std::vector<CurveDegree> m_class_intersections(const ResolvedModel& model, const MClass& cls);

struct DerivationStep {
  std::string step;
  std::string hypothesis;
  std::string evidence;
  bool holds;
};

struct Derivation {
  std::string claim;
  std::vector<DerivationStep> steps;
  bool holds;
};

/// Checks the numeric hypotheses under which E is a fixed component of
/// |ℳ(r, ρ)|: a negative curve on 𝒞 and base-locus propagation around all of 𝒞.
/// Failing hypotheses give a derivation with holds = false.
Derivation prove_E_fixed(const ResolvedModel& model, std::int64_t r, std::int64_t rho);

/// dim |ℳ(r, ντ)| = r. Requires a constant family of finite order τ and a
/// cycle base with P ≠ 0, P² = 0; r ≥ 0, ν > 0.
std::int64_t pluri_system_dim(const TwistorPencil& p, std::int64_t r, std::int64_t nu);

enum class AlgebraicDimension { a1, a2, a3, inconsistent };

std::string_view to_string(AlgebraicDimension a);

struct Verdict {
  AlgebraicDimension value;
  /// κ⁻¹ of a generic smooth member; a(Z) ≤ 1 + this.
  std::int64_t generic_kodaira;
  std::vector<std::string> justification;
  /// For `inconsistent`: the a = 2 and a = 1 derivations, in that order.
  std::vector<Derivation> derivations;
  std::optional<ZariskiDecomposition> decomposition;
};

Verdict algebraic_dimension(const TwistorPencil& p);

}  // namespace anticanon
