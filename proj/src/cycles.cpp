#include "anticanon/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "anticanon/errors.hpp"

namespace anticanon {

CycleConfig CycleConfig::real(const std::vector<std::int64_t>& half, std::optional<std::int64_t> n) {
  CycleConfig c;
  c.self_ints = half;
  c.self_ints.insert(c.self_ints.end(), half.begin(), half.end());
  c.real_k = half.size();
  c.n = n;
  return c;
}

std::size_t CycleConfig::conjugate(std::size_t i) const {
  if (!real_k || *real_k == 0) return i;
  return (i + *real_k) % size();
}

SymMatrix intersection_matrix(const CycleConfig& c) {
  const std::size_t m = c.size();
  if (m == 0) throw PreconditionError("empty cycle");
  SymMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) a.set(i, i, c.self_ints[i]);
  if (m == 2) {
    a.set(0, 1, 2);
  } else if (m > 2) {
    for (std::size_t i = 0; i < m; ++i) a.set(i, (i + 1) % m, 1);
  }
  return a;
}

std::int64_t canonical_square(const CycleConfig& c) {
  SymMatrix a = intersection_matrix(c);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j);
  return s;
}

std::vector<Diagnostic> validate(const CycleConfig& c) {
  std::vector<Diagnostic> out;
  const std::size_t m = c.size();
  if (m == 0) {
    out.push_back({"length", "cycle must have at least one component"});
    return out;
  }
  if (c.real_k) {
    const std::size_t k = *c.real_k;
    if (k == 0 || m != 2 * k) {
      out.push_back({"real_structure", "real structure needs m = 2k with k >= 1 (m = " + std::to_string(m) +
                                           ", k = " + std::to_string(k) + ")"});
    } else {
      for (std::size_t i = 0; i < k; ++i)
        if (c.self_ints[i] != c.self_ints[i + k])
          out.push_back({"reality", "C" + std::to_string(i + 1) + "^2 = " + std::to_string(c.self_ints[i]) +
                                        " but conj(C" + std::to_string(i + 1) + ")^2 = " +
                                        std::to_string(c.self_ints[i + k])});
      SymMatrix a = intersection_matrix(c);
      bool invariant = true;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          invariant = invariant && (i == j || a(i, j) == a(c.conjugate(i), c.conjugate(j)));
      if (!invariant) out.push_back({"real_adjacency", "intersection pattern is not conjugation invariant"});
    }
  }
  if (c.n.has_value() != c.real_k.has_value())
    out.push_back({"n_presence", c.n ? "n given for a configuration without real structure"
                                     : "real configuration without n"});
  if (c.n) {
    if (*c.n < 0) out.push_back({"n_range", "n must be >= 0"});
    const std::int64_t k2 = canonical_square(c);
    if (k2 != 8 - 2 * *c.n)
      out.push_back({"canonical_square", "C^2 = " + std::to_string(k2) + " but 8 - 2n = " +
                                             std::to_string(8 - 2 * *c.n)});
  }
  // Adjunction: C·Cᵢ = Cᵢ² + 2 − 2δᵢ, δᵢ = number of nodes on Cᵢ itself.
  SymMatrix a = intersection_matrix(c);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t cc = 0;
    for (std::size_t j = 0; j < m; ++j) cc += a(i, j);
    const std::int64_t expected = c.self_ints[i] + (m == 1 ? 0 : 2);
    if (cc != expected)
      out.push_back({"adjunction", "C.C" + std::to_string(i + 1) + " = " + std::to_string(cc) + ", expected " +
                                       std::to_string(expected)});
  }
  return out;
}

void require_valid(const CycleConfig& c) {
  auto diags = validate(c);
  if (diags.empty()) return;
  std::vector<std::string> lines;
  for (const auto& d : diags) lines.push_back(d.invariant + ": " + d.message);
  throw ValidationError(std::move(lines));
}

QDivisor QDivisor::from_integers(const std::vector<std::int64_t>& v) {
  QDivisor d;
  for (auto x : v) d.coeffs.emplace_back(static_cast<long>(x));
  return d;
}

bool QDivisor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; });
}

bool QDivisor::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return anticanon::is_integral(x); });
}

bool QDivisor::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x >= 0; });
}

QDivisor QDivisor::operator+(const QDivisor& o) const {
  if (o.size() != size()) throw std::invalid_argument("QDivisor size mismatch");
  QDivisor r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

QDivisor QDivisor::operator-(const QDivisor& o) const {
  if (o.size() != size()) throw std::invalid_argument("QDivisor size mismatch");
  QDivisor r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

QDivisor QDivisor::operator*(const Rational& s) const {
  QDivisor r = *this;
  for (auto& x : r.coeffs) x *= s;
  return r;
}

std::string to_string(const QDivisor& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += to_string(d.coeffs[i]);
  }
  return s + ")";
}

RationalVector component_degrees(const CycleConfig& c, const QDivisor& d) {
  if (d.size() != c.size()) throw std::invalid_argument("divisor length does not match cycle");
  return intersection_matrix(c).apply(d.coeffs);
}

Rational self_intersection(const CycleConfig& c, const QDivisor& d) {
  if (d.size() != c.size()) throw std::invalid_argument("divisor length does not match cycle");
  return intersection_matrix(c).form(d.coeffs, d.coeffs);
}

namespace {

std::vector<std::size_t> support_of(const QDivisor& d) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.coeffs[i] != 0) s.push_back(i);
  return s;
}

ZariskiDecomposition finish(const CycleConfig& c, QDivisor p, QDivisor n_part) {
  ZariskiDecomposition z;
  z.d = self_intersection(c, p);
  z.negative_support = support_of(n_part);
  if (!p.is_zero()) {
    Integer den = common_denominator(p.coeffs);
    z.m0 = to_int64(den);
    for (const auto& x : p.coeffs) z.l.push_back(to_int64(Rational(x * den)));
  }
  z.p = std::move(p);
  z.n_part = std::move(n_part);
  return z;
}

QDivisor resolve_divisor(const CycleConfig& c, const std::optional<QDivisor>& divisor) {
  QDivisor d = divisor.value_or(QDivisor::all_ones(c.size()));
  if (d.size() != c.size()) throw PreconditionError("divisor length does not match cycle");
  if (!d.is_effective()) throw PreconditionError("divisor must be effective");
  return d;
}

// N supported on `support` with (D − N)·Cᵢ = 0 for i in support.
std::optional<QDivisor> negative_part_on(const SymMatrix& a, const RationalVector& d_degrees,
                                         const std::vector<std::size_t>& support) {
  RationalVector rhs;
  for (auto i : support) rhs.push_back(d_degrees[i]);
  auto x = solve_linear(a, support, rhs);
  if (!x) return std::nullopt;
  QDivisor n = QDivisor::zero(a.dim());
  for (std::size_t t = 0; t < support.size(); ++t) n.coeffs[support[t]] = (*x)[t];
  return n;
}

}  // namespace

std::vector<std::string> certify_decomposition(const CycleConfig& c, const QDivisor& divisor,
                                               const QDivisor& p, const QDivisor& n_part) {
  std::vector<std::string> failures;
  if (p + n_part != divisor) failures.push_back("P + N differs from the divisor");
  if (!p.is_effective()) failures.push_back("P is not effective");
  if (!n_part.is_effective()) failures.push_back("N is not effective");
  RationalVector pc = component_degrees(c, p);
  for (std::size_t i = 0; i < pc.size(); ++i)
    if (pc[i] < 0) failures.push_back("(i) P.C" + std::to_string(i + 1) + " = " + to_string(pc[i]) + " < 0");
  auto supp = support_of(n_part);
  if (!supp.empty()) {
    if (definiteness(intersection_matrix(c).principal(supp)).kind != Definiteness::negative_definite)
      failures.push_back("(ii) support of N is not negative definite");
    for (auto i : supp)
      if (pc[i] != 0)
        failures.push_back("(iii) P.C" + std::to_string(i + 1) + " = " + to_string(pc[i]) + " on the support of N");
  }
  return failures;
}

ZariskiDecomposition zariski_decompose(const CycleConfig& c, const std::optional<QDivisor>& divisor) {
  const QDivisor d = resolve_divisor(c, divisor);
  const SymMatrix a = intersection_matrix(c);
  const RationalVector d_degrees = a.apply(d.coeffs);

  std::vector<std::size_t> support;
  QDivisor n_part = QDivisor::zero(c.size());
  for (;;) {
    auto solved = negative_part_on(a, d_degrees, support);
    if (!solved) throw CertificationError("negative support has a singular intersection matrix");
    n_part = std::move(*solved);
    RationalVector pc = a.apply((d - n_part).coeffs);
    std::optional<std::size_t> violating;
    for (std::size_t j = 0; j < c.size() && !violating; ++j)
      if (pc[j] < 0 && !std::binary_search(support.begin(), support.end(), j)) violating = j;
    if (!violating) break;
    support.insert(std::upper_bound(support.begin(), support.end(), *violating), *violating);
  }
  QDivisor p = d - n_part;
  auto failures = certify_decomposition(c, d, p, n_part);
  if (!failures.empty()) {
    std::string msg = "Zariski decomposition failed certification:";
    for (const auto& f : failures) msg += " " + f + ";";
    throw CertificationError(msg);
  }
  return finish(c, std::move(p), std::move(n_part));
}

ZariskiDecomposition zariski_oracle(const CycleConfig& c, const std::optional<QDivisor>& divisor) {
  const std::size_t m = c.size();
  if (m > 12) throw PreconditionError("zariski_oracle supports at most 12 components");
  const QDivisor d = resolve_divisor(c, divisor);
  const SymMatrix a = intersection_matrix(c);
  const RationalVector d_degrees = a.apply(d.coeffs);

  std::vector<std::pair<QDivisor, QDivisor>> candidates;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) support.push_back(i);
    auto n_part = negative_part_on(a, d_degrees, support);
    if (!n_part) continue;
    QDivisor p = d - *n_part;
    if (!certify_decomposition(c, d, p, *n_part).empty()) continue;
    bool seen = std::any_of(candidates.begin(), candidates.end(),
                            [&](const auto& cand) { return cand.first == p; });
    if (!seen) candidates.emplace_back(std::move(p), std::move(*n_part));
  }
  if (candidates.size() != 1)
    throw CertificationError("oracle found " + std::to_string(candidates.size()) +
                             " distinct certified decompositions; expected exactly one");
  return finish(c, std::move(candidates.front().first), std::move(candidates.front().second));
}

std::pair<std::int64_t, std::vector<std::int64_t>> m0_coefficients(const ZariskiDecomposition& z) {
  if (!z.m0) throw PreconditionError("m0 is undefined when P = 0");
  return {*z.m0, z.l};
}

Rational degree(const ZariskiDecomposition& z) { return z.d; }

std::string_view to_string(Kodaira k) {
  switch (k) {
    case Kodaira::zero: return "zero";
    case Kodaira::one: return "one";
    case Kodaira::two: return "two";
    case Kodaira::needs_order: return "needs_order";
  }
  return "needs_order";
}

Kodaira classify_kodaira(const CycleConfig& c, const std::optional<Order>& order_info) {
  auto z = zariski_decompose(c);
  if (z.p.is_zero()) return Kodaira::zero;
  if (z.d > 0) return Kodaira::two;
  if (!order_info) return Kodaira::needs_order;
  return order_info->is_finite() ? Kodaira::one : Kodaira::zero;
}

std::int64_t riemann_roch_chi(const CycleConfig& c, const QDivisor& d) {
  if (!d.is_integral()) throw PreconditionError("Riemann-Roch needs an integral divisor");
  Rational d2 = self_intersection(c, d);
  Rational dc = 0;
  for (const auto& x : component_degrees(c, d)) dc += x;
  Rational twice = d2 + dc;
  if (!is_integral(twice / 2)) throw PreconditionError("non-integral Euler characteristic: invalid divisor");
  return 1 + to_int64(Rational(twice / 2));
}

std::optional<std::int64_t> ambient_n(const CycleConfig& c) {
  if (c.n) return c.n;
  const std::int64_t diff = 8 - canonical_square(c);
  if (diff < 0 || diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

}  // namespace anticanon
