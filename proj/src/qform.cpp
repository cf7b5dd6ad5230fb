#include "anticanon/qform.hpp"

#include <numeric>
#include <stdexcept>

namespace anticanon {

using RationalMatrix = std::vector<RationalVector>;

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.entries_[i * m.dim_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < m.dim_; ++i)
    for (std::size_t j = i + 1; j < m.dim_; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  entries_[i * dim_ + j] = value;
  entries_[j * dim_ + i] = value;
}

SymMatrix SymMatrix::principal(std::span<const std::size_t> indices) const {
  SymMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      sub.entries_[a * sub.dim_ + b] = (*this)(indices[a], indices[b]);
  return sub;
}

RationalVector SymMatrix::apply(const RationalVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch in SymMatrix::apply");
  RationalVector y(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((*this)(i, j) != 0) y[i] += Rational(static_cast<long>((*this)(i, j))) * x[j];
  return y;
}

Rational SymMatrix::form(const RationalVector& x, const RationalVector& y) const {
  RationalVector my = apply(y);
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch in SymMatrix::form");
  Rational s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += x[i] * my[i];
  return s;
}

std::string_view to_string(Definiteness kind) {
  switch (kind) {
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite: return "negative_semidefinite";
    case Definiteness::other: return "other";
  }
  return "other";
}

namespace {

RationalMatrix to_rational(const SymMatrix& m) {
  RationalMatrix a(m.dim(), RationalVector(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = static_cast<long>(m(i, j));
  return a;
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Integer> primitive(const RationalVector& v) {
  Integer den = common_denominator(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Rational scaled = x * den;
    out.emplace_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& z : out)
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  for (auto& z : out) z = z / g * sign;
  return out;
}

}  // namespace

std::vector<std::vector<Integer>> kernel(const SymMatrix& m) {
  RationalMatrix a = to_rational(m);
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.dim(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < m.dim(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.dim(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

DefinitenessReport definiteness(const SymMatrix& m) {
  // Decide whether -M is positive semidefinite. A symmetric matrix is PSD iff
  // elimination on positive diagonal pivots never meets a negative diagonal,
  // and a remaining block with zero diagonal is identically zero.
  RationalMatrix a = to_rational(m);
  for (auto& row : a)
    for (auto& x : row) x = -x;
  const std::size_t n = m.dim();
  std::vector<bool> active(n, true);
  std::size_t rank = 0;
  for (;;) {
    std::optional<std::size_t> pivot;
    bool any_active = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      any_active = true;
      if (a[i][i] < 0) return {Definiteness::other, {}};
      if (a[i][i] > 0 && !pivot) pivot = i;
    }
    if (!any_active) break;
    if (!pivot) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (active[i] && active[j] && a[i][j] != 0) return {Definiteness::other, {}};
      break;
    }
    const std::size_t p = *pivot;
    active[p] = false;
    ++rank;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || a[i][p] == 0) continue;
      Rational f = a[i][p] / a[p][p];
      for (std::size_t j = 0; j < n; ++j)
        if (active[j]) a[i][j] -= f * a[p][j];
    }
  }
  if (rank == n) return {Definiteness::negative_definite, {}};
  return {Definiteness::negative_semidefinite, kernel(m)};
}

Rational determinant(const SymMatrix& m) {
  RationalMatrix a = to_rational(m);
  const std::size_t n = m.dim();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Definiteness definiteness_by_minors(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 16) throw std::invalid_argument("definiteness_by_minors: dim > 16");
  SymMatrix neg(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) neg.set(i, j, -m(i, j));

  bool definite = true;
  for (std::size_t r = 1; r <= n && definite; ++r) {
    std::vector<std::size_t> lead(r);
    std::iota(lead.begin(), lead.end(), 0);
    definite = determinant(neg.principal(lead)) > 0;
  }
  if (definite) return Definiteness::negative_definite;

  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (determinant(neg.principal(idx)) < 0) return Definiteness::other;
  }
  return Definiteness::negative_semidefinite;
}

std::optional<RationalVector> solve_linear(const SymMatrix& a, std::span<const std::size_t> support,
                                           const RationalVector& b) {
  if (b.size() != support.size()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t n = support.size();
  RationalMatrix aug(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = static_cast<long>(a(support[i], support[j]));
    aug[i][n] = b[i];
  }
  auto pivots = rref(aug);
  // Full rank means the first n columns are exactly the pivot columns.
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::optional<RationalVector> solve_linear(const SymMatrix& a, const RationalVector& b) {
  std::vector<std::size_t> all(a.dim());
  std::iota(all.begin(), all.end(), 0);
  return solve_linear(a, all, b);
}

}  // namespace anticanon
