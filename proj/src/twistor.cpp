#include "anticanon/twistor.hpp"

#include <algorithm>
#include <sstream>

#include "anticanon/errors.hpp"

namespace anticanon {

std::size_t TwistorPencil::k() const {
  if (is_elliptic()) return 0;
  return cycle().real_k.value_or(0);
}

std::vector<std::string> validate(const TwistorPencil& p) {
  std::vector<std::string> out;
  if (p.n < 4) out.push_back("n = " + std::to_string(p.n) + " but the pencil model needs n >= 4");
  if (p.is_elliptic()) {
    if (!p.resolution.empty()) out.push_back("resolution bits given for an elliptic base");
    return out;
  }
  const CycleConfig& c = p.cycle();
  for (const auto& d : validate(c)) out.push_back(d.invariant + ": " + d.message);
  if (!c.is_real()) out.push_back("base cycle of a twistor pencil must carry a real structure");
  if (c.n && *c.n != p.n) out.push_back("cycle n = " + std::to_string(*c.n) + " differs from pencil n");
  if (p.resolution.size() != p.k())
    out.push_back("resolution has " + std::to_string(p.resolution.size()) + " bits, expected k = " +
                  std::to_string(p.k()));
  for (int b : p.resolution)
    if (b != 0 && b != 1) out.push_back("resolution bits must be 0 or 1");
  return out;
}

void require_valid(const TwistorPencil& p) {
  auto v = validate(p);
  if (!v.empty()) throw ValidationError(std::move(v));
}

std::string component_name(std::size_t i, std::size_t k) {
  return i < k ? "C" + std::to_string(i + 1) : "Cbar" + std::to_string(i - k + 1);
}

std::vector<ReducibleFiber> reducible_fibers(const TwistorPencil& p) {
  std::vector<ReducibleFiber> out;
  if (p.is_elliptic()) return out;
  const std::size_t k = p.k();
  const std::size_t m = 2 * k;
  for (std::size_t i = 1; i <= k; ++i) {
    ReducibleFiber f;
    f.index = i;
    f.plus = "S" + std::to_string(i) + "+";
    f.minus = "S" + std::to_string(i) + "-";
    f.twistor_line = "L" + std::to_string(i);
    f.line_point = component_name(i - 1, k) + "^" + component_name(i % m, k);
    f.conjugate_line_point = component_name(i - 1 + k, k) + "^" + component_name((i + k) % m, k);
    for (std::size_t t = 0; t < k; ++t) {
      f.plus_half.push_back((i + t) % m);
      f.minus_half.push_back((i + t + k) % m);
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

ZariskiDecomposition elliptic_free_decomposition(const TwistorPencil& p) {
  if (p.is_elliptic()) throw PreconditionError("operation needs a cycle base");
  return zariski_decompose(p.cycle());
}

void require_nef_square_zero(const ZariskiDecomposition& z) {
  if (z.p.is_zero()) throw PreconditionError("nef part P = 0");
  if (z.d != 0) throw PreconditionError("P^2 = " + to_string(z.d) + " is not 0");
}

}  // namespace

TwistorPencil normalize_rotation(const TwistorPencil& p) {
  require_valid(p);
  auto z = elliptic_free_decomposition(p);
  require_nef_square_zero(z);
  const CycleConfig& c = p.cycle();
  if (canonical_square(c) >= 0) throw PreconditionError("normalization needs K^2 < 0");
  const std::size_t k = p.k();
  const std::size_t m = 2 * k;
  std::optional<std::size_t> shift;
  for (std::size_t i = 0; i < k && !shift; ++i)
    if (z.l[i] > z.l[(i + 1) % m]) shift = i;
  if (!shift) throw CertificationError("all l_i are equal although K^2 < 0 (P != 0, P^2 = 0)");

  TwistorPencil out = p;
  std::vector<std::int64_t> half(k);
  for (std::size_t j = 0; j < k; ++j) half[j] = c.self_ints[(j + *shift) % m];
  out.base = CycleConfig::real(half, c.n);
  for (std::size_t j = 0; j < k; ++j) out.resolution[j] = p.resolution[(j + *shift) % k];
  return out;
}

std::size_t ResolvedModel::position(std::string_view name) const {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i].name == name) return i;
  throw PreconditionError("no curve named " + std::string(name) + " in the model");
}

ResolvedModel build_resolved_model(const TwistorPencil& p) {
  require_valid(p);
  auto z = elliptic_free_decomposition(p);
  const std::size_t k = p.k();
  if (k < 2) throw PreconditionError("resolved model needs k >= 2");
  require_nef_square_zero(z);
  if (z.l[0] <= z.l[1]) throw PreconditionError("pencil is not normalized (need l1 > l2); use normalize_rotation");

  const CycleConfig& c = p.cycle();
  const std::size_t m = 2 * k;
  ResolvedModel model{k, c, *z.m0, z.l, p.resolution[0], {}};

  auto curve_name = [&](std::size_t i) {
    return i < k ? "C[1," + std::to_string(i + 1) + "]" : "Cbar[1," + std::to_string(i - k + 1) + "]";
  };
  // The special fibre component X shares its E-fibre with Δ. Bit 0: X = C_{1,2},
  // meeting E_2 with (C_2)²_{S_1^+} = C_2² + 1 and its cyclic successor once.
  // Bit 1 mirrors this at C_{1,1} and its cyclic predecessor.
  const std::size_t special = model.node1_bit == 0 ? 1 : 0;

  for (std::size_t half = 0; half < 2; ++half) {
    const std::size_t off = half * k;
    const std::string bar = half ? "bar" : "";
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t i = off + t;
      ModelCurve curve{curve_name(i), i, PairingRule::irreducible_fiber, {}, 0};
      if (t == special) {
        const std::size_t neighbour = model.node1_bit == 0 ? (i + 1) % m : (i + m - 1) % m;
        curve.rule = PairingRule::explicit_pairing;
        curve.e_pairings = {{i, c.self_ints[i] + 1}, {neighbour, 1}};
      }
      model.cycle.push_back(std::move(curve));
      if (t == 0) {
        // Δ sits between C_{1,1} and C_{1,2}; its partner index is fixed below.
        model.cycle.push_back({"Delta" + bar + "1", off + special, PairingRule::fiber_complement, {}, 0});
      }
    }
  }
  for (std::size_t pos = 0; pos < model.cycle.size(); ++pos) {
    auto& curve = model.cycle[pos];
    if (curve.rule != PairingRule::fiber_complement) continue;
    for (std::size_t q = 0; q < model.cycle.size(); ++q)
      if (q != pos && model.cycle[q].divisor == curve.divisor) curve.partner = q;
  }
  return model;
}

std::vector<CurveDegree> m_class_intersections(const ResolvedModel& model, const MClass& cls) {
  // f₁*𝒪(r) is trivial on curves inside a fibre, so r never contributes.
  auto explicit_degree = [&](const ModelCurve& curve) {
    std::int64_t s = 0;
    for (const auto& [j, e] : curve.e_pairings) s += model.l[j] * e;
    return cls.rho * s;
  };
  std::vector<CurveDegree> out;
  for (const auto& curve : model.cycle) {
    std::int64_t deg = 0;
    switch (curve.rule) {
      case PairingRule::irreducible_fiber: deg = 0; break;
      case PairingRule::explicit_pairing: deg = explicit_degree(curve); break;
      case PairingRule::fiber_complement: deg = -explicit_degree(model.cycle[curve.partner]); break;
    }
    out.push_back({curve.name, deg});
  }
  return out;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
  if (names.empty()) return "none";
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

std::string degree_list(const std::vector<CurveDegree>& degs) {
  std::string s;
  for (const auto& d : degs) s += (s.empty() ? "" : ", ") + d.curve + ": " + std::to_string(d.degree);
  return s;
}

}  // namespace

Derivation prove_E_fixed(const ResolvedModel& model, std::int64_t r, std::int64_t rho) {
  Derivation out;
  out.claim = "E is a fixed component of |M(" + std::to_string(r) + "," + std::to_string(rho) + ")|";
  const auto degs = m_class_intersections(model, {r, rho});
  const std::size_t len = model.cycle.size();

  std::vector<std::string> negative;
  for (const auto& d : degs)
    if (d.degree < 0) negative.push_back(d.curve);
  const std::int64_t gap = model.l[0] - model.l[1];

  DerivationStep s1;
  s1.step = "negative curve on the cycle";
  s1.hypothesis = "rho > 0 and some curve of the cycle in f1^-1(lambda1) meets M(r,rho) negatively";
  s1.evidence = "rho = " + std::to_string(rho) + ", l1 - l2 = " + std::to_string(gap) + "; " + degree_list(degs);
  s1.holds = rho > 0 && !negative.empty();
  out.steps.push_back(s1);

  std::vector<char> forced(len, 0);
  std::vector<std::string> by_degree_zero, by_fiber;
  if (s1.holds) {
    for (std::size_t q = 0; q < len; ++q) forced[q] = degs[q].degree < 0;
    auto divisor_fibre_size = [&](std::size_t q) {
      return std::count_if(model.cycle.begin(), model.cycle.end(),
                           [&](const ModelCurve& c) { return c.divisor == model.cycle[q].divisor; });
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t q = 0; q < len; ++q) {
        if (forced[q]) continue;
        const std::size_t nb[2] = {(q + len - 1) % len, (q + 1) % len};
        const bool touches = forced[nb[0]] || forced[nb[1]];
        if (!touches) continue;
        if (degs[q].degree == 0) {
          forced[q] = 1;
          by_degree_zero.push_back(model.cycle[q].name);
          changed = true;
          continue;
        }
        if (divisor_fibre_size(q) < 2) continue;
        for (std::size_t b : nb)
          if (forced[b] && model.cycle[b].divisor != model.cycle[q].divisor) {
            forced[q] = 1;
            by_fiber.push_back(model.cycle[q].name);
            changed = true;
            break;
          }
      }
    }
  }

  DerivationStep s2;
  s2.step = "chains in the base locus";
  s2.hypothesis = "a degree-0 curve meeting the base locus lies in it";
  s2.evidence = "negative: " + join_names(negative) + "; forced through degree 0: " + join_names(by_degree_zero);
  s2.holds = s1.holds;
  out.steps.push_back(s2);

  std::vector<std::string> fibre_sums;
  bool fibres_zero = true;
  for (std::size_t j = 0; j < 2 * model.k; ++j) {
    std::int64_t sum = 0;
    for (std::size_t q = 0; q < len; ++q)
      if (model.cycle[q].divisor == j) sum += degs[q].degree;
    fibres_zero = fibres_zero && sum == 0;
    if (sum != 0) fibre_sums.push_back(component_name(j, model.k) + ": " + std::to_string(sum));
  }
  DerivationStep s3;
  s3.step = "exceptional fibre components";
  s3.hypothesis = "every E_j has M-degree 0 on its lambda1-fibre, so a section vanishing at a point of one "
                  "fibre component off the other contains that component";
  s3.evidence = std::string("fibre degrees ") + (fibres_zero ? "all 0" : "nonzero at " + join_names(fibre_sums)) +
                "; forced through reducible fibres: " + join_names(by_fiber);
  s3.holds = s1.holds && fibres_zero;
  out.steps.push_back(s3);

  const bool all = std::all_of(forced.begin(), forced.end(), [](char f) { return f != 0; });
  DerivationStep s4;
  s4.step = "cycle in the zero divisor";
  s4.hypothesis = "every curve of the cycle lies in (s) for each section s of M(r,rho)|_E";
  s4.evidence = std::to_string(std::count(forced.begin(), forced.end(), 1)) + " of " + std::to_string(len) +
                " curves forced; restriction to the cycle vanishes, so H0(M(r-1,rho)|_E) = H0(M(r,rho)|_E) "
                "for all r and twisting down gives H0(E, M(r,rho)|_E) = 0";
  s4.holds = s1.holds && s3.holds && all;
  out.steps.push_back(s4);

  out.holds = std::all_of(out.steps.begin(), out.steps.end(), [](const DerivationStep& s) { return s.holds; });
  return out;
}

std::int64_t pluri_system_dim(const TwistorPencil& p, std::int64_t r, std::int64_t nu) {
  require_valid(p);
  if (r < 0) throw PreconditionError("r must be >= 0");
  if (nu <= 0) throw PreconditionError("nu must be > 0");
  auto profile = family_profile(p.family);
  if (profile.kind != FamilyProfileKind::constant_finite)
    throw PreconditionError("pluri_system_dim needs a constant family of finite order");
  require_nef_square_zero(elliptic_free_decomposition(p));
  // |ℳ(r, ντ)| = |f₁*𝒪(r)| + ντ m₀𝑷 and h⁰(𝒪(r)) = r + 1.
  return r;
}

std::string_view to_string(AlgebraicDimension a) {
  switch (a) {
    case AlgebraicDimension::a1: return "a1";
    case AlgebraicDimension::a2: return "a2";
    case AlgebraicDimension::a3: return "a3";
    case AlgebraicDimension::inconsistent: return "inconsistent";
  }
  return "inconsistent";
}

namespace {

Derivation generic_fibre_derivation(const ZariskiDecomposition& z, std::int64_t tau) {
  Derivation d;
  d.claim = "a(Z) = 2";
  d.steps.push_back({"constant finite order",
                     "P != 0, P^2 = 0 and m0 P|_C has the same finite order on every smooth member",
                     "m0 = " + std::to_string(*z.m0) + ", d = " + to_string(z.d) + ", tau = " + std::to_string(tau),
                     !z.p.is_zero() && z.d == 0 && tau > 0});
  d.steps.push_back({"anti-Kodaira dimension of smooth members",
                     "finite order of m0 P|_C is equivalent to kappa^-1(S) = 1 when P != 0, P^2 = 0",
                     "kappa^-1 = 1 for every smooth member, in particular a generic one", true});
  d.steps.push_back({"fibre space estimate", "a(Z) = 1 + kappa^-1(S) for generic S in the pencil",
                     "a(Z) = 1 + 1 = 2", true});
  d.holds = std::all_of(d.steps.begin(), d.steps.end(), [](const DerivationStep& s) { return s.holds; });
  return d;
}

Derivation fixed_component_derivation(const TwistorPencil& p, const ZariskiDecomposition& z, std::int64_t tau) {
  Derivation d;
  d.claim = "a(Z) = 1";
  const TwistorPencil normalized = normalize_rotation(p);
  const ResolvedModel model = build_resolved_model(normalized);
  const std::int64_t m0 = *z.m0;

  bool all_fixed = true;
  std::string evidence;
  for (std::int64_t nu = 1; nu <= 3; ++nu) {
    const std::int64_t r = nu * tau * m0;
    Derivation fixed = prove_E_fixed(model, r, nu * tau);
    all_fixed = all_fixed && fixed.holds;
    evidence += (evidence.empty() ? "" : "; ") + fixed.claim + (fixed.holds ? ": holds" : ": fails");
  }
  d.steps.push_back({"E fixed in |L^nu|", "E is a fixed component of |M(nu tau m0, nu tau)| for nu > 0", evidence,
                     all_fixed});

  // τm₀P − C is effective (lᵢ ≥ 1) with χ = 1; on each smooth member it is the
  // fixed part of |ντm₀P − C| beyond |(ν−1)τm₀P|.
  const CycleConfig& c = normalized.cycle();
  QDivisor residual = QDivisor::from_integers(model.l) * Rational(static_cast<long>(tau)) - QDivisor::all_ones(c.size());
  const std::int64_t chi = riemann_roch_chi(c, residual);
  d.steps.push_back({"residual fixed part", "tau m0 P - C is effective with chi = 1",
                     "tau m0 P - C = " + to_string(residual) + ", chi = " + std::to_string(chi),
                     residual.is_effective() && chi == 1});

  std::string dims;
  bool dims_ok = true;
  for (std::int64_t nu = 1; nu <= 3; ++nu) {
    const std::int64_t r = nu * tau * m0;
    const std::int64_t dim = pluri_system_dim(p, r, nu);
    dims_ok = dims_ok && dim == r;
    dims += (dims.empty() ? "" : ", ") + std::string("dim|L^") + std::to_string(nu) + "| = " + std::to_string(dim);
  }
  d.steps.push_back({"pluri-fundamental systems", "|L^nu| = |f1^* O(nu tau m0)| + nu tau m0 P for all nu > 0",
                     dims + "; image is a rational normal curve, so a(Z) = kappa(Z,F) = 1", dims_ok});
  d.holds = std::all_of(d.steps.begin(), d.steps.end(), [](const DerivationStep& s) { return s.holds; });
  return d;
}

}  // namespace

Verdict algebraic_dimension(const TwistorPencil& p) {
  require_valid(p);
  Verdict v{AlgebraicDimension::a1, 0, {}, {}, std::nullopt};

  if (p.is_elliptic()) {
    const auto& e = std::get<EllipticBase>(p.base);
    if (p.n > 4) {
      v.justification.push_back("smooth elliptic base with K^2 = 8 - 2n < 0: h0(mK^-1) = 1 for all m, kappa^-1 = 0");
      return v;
    }
    Order o = order(e.normal_bundle);
    if (o.is_finite()) {
      v.value = AlgebraicDimension::a2;
      v.generic_kodaira = 1;
      v.justification.push_back("n = 4, elliptic base: K_S^-1|_C = F|_C has finite order " + std::to_string(o.tau()) +
                                " independent of S, so kappa^-1 = 1 for every smooth member and a(Z) = 2");
    } else {
      v.justification.push_back("n = 4, elliptic base: F|_C has infinite order, kappa^-1 = 0, a(Z) = 1");
    }
    return v;
  }

  const ZariskiDecomposition z = zariski_decompose(p.cycle());
  v.decomposition = z;
  if (z.p.is_zero()) {
    v.justification.push_back("P = 0: kappa^-1(S) = 0 for every smooth member, so a(Z) = 1");
    return v;
  }
  if (z.d > 0) {
    v.value = AlgebraicDimension::a3;
    v.generic_kodaira = 2;
    v.justification.push_back("d = P^2 = " + to_string(z.d) +
                              " > 0 on every smooth member (the decomposition does not depend on S): kappa^-1 = 2, "
                              "Z is Moishezon");
    return v;
  }
  if (p.n > 4 && p.k() < 2)
    throw CertificationError("P != 0, P^2 = 0 with n > 4 requires k >= 2");

  const FamilyProfile profile = family_profile(p.family);
  switch (profile.kind) {
    case FamilyProfileKind::nonconstant:
      v.justification.push_back("the order of P_lambda is not constant, so some smooth member has infinite order, "
                                "kappa^-1 = 0 there, and a(Z) = 1");
      return v;
    case FamilyProfileKind::constant_infinite:
      v.justification.push_back("m0 P|_C has infinite order on every smooth member: kappa^-1 = 0, a(Z) = 1");
      return v;
    case FamilyProfileKind::constant_finite: break;
  }
  const std::int64_t tau = *profile.tau;
  v.generic_kodaira = 1;
  if (p.n == 4) {
    v.value = AlgebraicDimension::a2;
    v.justification.push_back("n = 4 with constant finite order " + std::to_string(tau) +
                              ": kappa^-1 = 1 for all smooth members and a(Z) = 2");
    return v;
  }
  v.value = AlgebraicDimension::inconsistent;
  v.justification.push_back("n = " + std::to_string(p.n) + " > 4 with constant finite order " + std::to_string(tau) +
                            ": the generic-fibre formula gives a(Z) = 2 while the fixed-component argument gives "
                            "a(Z) = 1, so this pencil data cannot occur");
  v.derivations.push_back(generic_fibre_derivation(z, tau));
  v.derivations.push_back(fixed_component_derivation(p, z, tau));
  return v;
}

}  // namespace anticanon
