// Exact linear algebra over Q for symmetric integer (intersection) matrices.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "anticanon/rational.hpp"

namespace anticanon {

/// Symmetric matrix of integer intersection numbers.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

  /// Throws std::invalid_argument unless `rows` is square and symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static SymMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  /// Sets entries (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, std::int64_t value);

  /// Principal submatrix on `indices` (in the given order).
  SymMatrix principal(std::span<const std::size_t> indices) const;

  RationalVector apply(const RationalVector& x) const;
  /// Bilinear form xᵀ M y.
  Rational form(const RationalVector& x, const RationalVector& y) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

enum class Definiteness { negative_definite, negative_semidefinite, other };

std::string_view to_string(Definiteness kind);

struct DefinitenessReport {
  Definiteness kind = Definiteness::other;
  /// Primitive integer kernel vectors; empty unless negative semidefinite.
  std::vector<std::vector<Integer>> kernel_basis;
};

/// Exact classification by symmetric elimination with diagonal pivoting.
DefinitenessReport definiteness(const SymMatrix& m);

/// Second route: leading principal minors for definiteness and all principal
/// minors for semidefiniteness. Exponential; requires dim <= 16.
Definiteness definiteness_by_minors(const SymMatrix& m);

/// Exact determinant by fraction-free elimination.
Rational determinant(const SymMatrix& m);

/// Null space basis, each vector primitive integral with first nonzero entry
/// positive. Ordered by pivot-free column.
std::vector<std::vector<Integer>> kernel(const SymMatrix& m);

/// Solves the subsystem of `a` restricted to rows and columns `support`;
/// `b` is indexed like `support`. Returns nullopt when the subsystem is singular.
std::optional<RationalVector> solve_linear(const SymMatrix& a, std::span<const std::size_t> support,
                                           const RationalVector& b);
std::optional<RationalVector> solve_linear(const SymMatrix& a, const RationalVector& b);

}  // namespace anticanon
