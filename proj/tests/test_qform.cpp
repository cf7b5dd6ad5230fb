#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "anticanon/cycles.hpp"
#include "anticanon/qform.hpp"
#include "support/generators.hpp"

using namespace anticanon;

namespace {

std::vector<std::vector<Integer>> ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return out;
}

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t dim) {
  SymMatrix m(dim);
  switch (rng() % 3) {
    case 0: {  // −BᵀB with rank below dim: semidefinite with a kernel
      const std::size_t rank = rng() % dim;
      std::vector<std::vector<std::int64_t>> b(rank, std::vector<std::int64_t>(dim));
      for (auto& row : b)
        for (auto& v : row) v = static_cast<std::int64_t>(rng() % 5) - 2;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
          std::int64_t s = 0;
          for (const auto& row : b) s += row[i] * row[j];
          m.set(i, j, -s);
        }
      return m;
    }
    case 1: {
      for (std::size_t i = 0; i < dim; ++i) {
        m.set(i, i, -static_cast<std::int64_t>(rng() % 7));
        for (std::size_t j = i + 1; j < dim; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % 3));
      }
      return m;
    }
    default: {
      auto c = testgen::random_walk(rng, dim, 6);
      return intersection_matrix(c);
    }
  }
}

/// Signs of xᵀMx over the nonzero vectors of {-2,…,2}^dim.
struct GridSigns {
  bool any_positive = false;
  bool any_zero = false;
};

GridSigns grid_signs(const SymMatrix& m) {
  const std::size_t dim = m.dim();
  GridSigns out;
  std::vector<int> x(dim, -2);
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) {
      std::int64_t q = 0;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) q += x[i] * m(i, j) * x[j];
      out.any_positive = out.any_positive || q > 0;
      out.any_zero = out.any_zero || q == 0;
    }
    std::size_t i = 0;
    while (i < dim && x[i] == 2) x[i++] = -2;
    if (i == dim) break;
    ++x[i];
  }
  return out;
}

SymMatrix permuted(const SymMatrix& m, const std::vector<std::size_t>& perm) { return m.principal(perm); }

}  // namespace

TEST_CASE("definiteness on the documented matrices") {
  auto b = definiteness(SymMatrix::from_rows({{-3, 2}, {2, -3}}));
  CHECK(b.kind == Definiteness::negative_definite);
  CHECK(b.kernel_basis.empty());

  auto a = definiteness(SymMatrix::from_rows({{-2, 2}, {2, -2}}));
  CHECK(a.kind == Definiteness::negative_semidefinite);
  CHECK(a.kernel_basis == ints({{1, 1}}));

  auto c = definiteness(SymMatrix::from_rows({{-1, 1, 0, 1}, {1, -4, 1, 0}, {0, 1, -1, 1}, {1, 0, 1, -4}}));
  CHECK(c.kind == Definiteness::negative_semidefinite);
  CHECK(c.kernel_basis == ints({{2, 1, 2, 1}}));

  CHECK(definiteness(SymMatrix::from_rows({{1}})).kind == Definiteness::other);
  CHECK(definiteness(SymMatrix::from_rows({{-1, 2}, {2, -1}})).kind == Definiteness::other);
  CHECK(definiteness(SymMatrix::from_rows({{0, 1}, {1, 0}})).kind == Definiteness::other);
  CHECK(definiteness(SymMatrix::from_rows({{0, 0}, {0, -1}})).kind == Definiteness::negative_semidefinite);
}

TEST_CASE("solve_linear") {
  auto x = solve_linear(SymMatrix::from_rows({{-4}}), RationalVector{-2});
  REQUIRE(x);
  CHECK(*x == RationalVector{Rational(1, 2)});

  RationalVector b{Rational(3), Rational(-1, 7), Rational(5, 2)};
  CHECK(solve_linear(SymMatrix::identity(3), b) == b);

  CHECK_FALSE(solve_linear(SymMatrix::from_rows({{-2, 2}, {2, -2}}), RationalVector{1, 1}));
  CHECK_FALSE(solve_linear(SymMatrix::from_rows({{-2, 2}, {2, -2}}), RationalVector{0, 0}));

  const auto m = SymMatrix::from_rows({{-1, 1, 0, 1}, {1, -4, 1, 0}, {0, 1, -1, 1}, {1, 0, 1, -4}});
  const std::vector<std::size_t> support{1, 3};
  auto y = solve_linear(m, support, RationalVector{-2, -2});
  REQUIRE(y);
  CHECK(*y == RationalVector{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("determinant") {
  CHECK(determinant(SymMatrix::from_rows({{-3, 2}, {2, -3}})) == 5);
  CHECK(determinant(SymMatrix::from_rows({{-2, 2}, {2, -2}})) == 0);
  CHECK(determinant(SymMatrix::identity(4)) == 1);
  CHECK(determinant(SymMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("definiteness agrees with the grid, the minors route and kernels") {
  std::mt19937_64 rng(20261018);
  int semidefinite = 0, definite = 0, other = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = 1 + rng() % 6;
    const SymMatrix m = random_symmetric(rng, dim);
    const auto report = definiteness(m);
    CAPTURE(trial);
    CHECK(definiteness_by_minors(m) == report.kind);

    const auto grid = grid_signs(m);
    if (grid.any_positive) CHECK(report.kind == Definiteness::other);
    if (report.kind == Definiteness::negative_definite) {
      ++definite;
      CHECK_FALSE(grid.any_zero);
      CHECK_FALSE(grid.any_positive);
    }
    if (report.kind == Definiteness::negative_semidefinite) {
      ++semidefinite;
      CHECK_FALSE(grid.any_positive);
      CHECK_FALSE(report.kernel_basis.empty());
      for (const auto& v : report.kernel_basis) {
        RationalVector q(v.begin(), v.end());
        const RationalVector image = m.apply(q);
        CHECK(std::all_of(image.begin(), image.end(), [](const Rational& e) { return e == 0; }));
        Integer g = 0;
        for (const auto& e : v) g = gcd(g, e);
        CHECK(g == 1);
      }
    }
    if (report.kind == Definiteness::other) ++other;

    std::vector<std::size_t> perm(m.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CAPTURE(to_string(report.kind));
    CHECK(definiteness(permuted(m, perm)).kind == report.kind);
  }
  CHECK(semidefinite > 20);
  CHECK(definite > 20);
  CHECK(other > 20);
}

TEST_CASE("positive kernel vectors come out positive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = testgen::random_square_zero(rng, trial % 2 == 0);
    const auto report = definiteness(intersection_matrix(c));
    REQUIRE(report.kind == Definiteness::negative_semidefinite);
    REQUIRE(report.kernel_basis.size() == 1);
    for (const auto& e : report.kernel_basis[0]) CHECK(e > 0);
  }
}
