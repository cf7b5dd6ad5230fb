// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "anticanon/birational.hpp"
#include "anticanon/cli.hpp"
#include "anticanon/fixtures.hpp"
#include "anticanon/report.hpp"
#include "anticanon/twistor.hpp"
#include "support/generators.hpp"

using namespace anticanon;

namespace {

struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string data(const std::string& name) { return std::string(ANTICANON_DATA_DIR) + "/" + name; }

std::string describe(const CycleConfig& c) { return to_string(QDivisor::from_integers(c.self_ints)); }

TwistorPencil pencil(const CycleConfig& c, PicZeroFamily family) {
  TwistorPencil p;
  p.n = *c.n;
  p.resolution.assign(*c.real_k, 0);
  p.base = c;
  p.family = std::move(family);
  return p;
}

std::vector<CycleConfig> named() {
  return {CycleConfig::real({-2}, 4), CycleConfig::real({-3}, 5), CycleConfig::real({-1, -4}, 5),
          CycleConfig::plain({-3, -1, -3}), CycleConfig::real({-5, 1}, 4)};
}

std::vector<CycleConfig> square_zero_corpus() {
  std::vector<CycleConfig> out;
  auto keep = [&](const CycleConfig& c) {
    const auto z = zariski_decompose(c);
    if (!z.p.is_zero() && z.d == 0) out.push_back(c);
  };
  for (const auto& c : named()) keep(c);
  for (const auto& c : generate_fixtures(2, 100)) keep(c);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) keep(testgen::random_walk(rng));
  return out;
}

Check criterion_cycle2() {
  Check c;
  for (std::int64_t n = 5; n <= 12; ++n) {
    const auto cfg = CycleConfig::real({2 - n}, n);
    const std::string tag = "n = " + std::to_string(n);
    c.expect(validate(cfg).empty(), tag + ": invalid");
    c.expect(definiteness(intersection_matrix(cfg)).kind == Definiteness::negative_definite, tag + ": not negdef");
    c.expect(zariski_decompose(cfg).p.is_zero(), tag + ": P != 0");
    c.expect(classify_kodaira(cfg) == Kodaira::zero, tag + ": kappa != 0");
    c.expect(algebraic_dimension(pencil(cfg, PicZeroFamily::nonconstant())).value == AlgebraicDimension::a1,
             tag + ": verdict not a1");
  }
  return c;
}

Check criterion_oracle() {
  Check c;
  std::vector<CycleConfig> configs = named();
  for (const auto& f : generate_fixtures(11, 250)) configs.push_back(f);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) configs.push_back(testgen::random_walk(rng, 10, 10));
  for (const auto& cfg : configs)
    c.expect(cfg.size() <= 10 && zariski_decompose(cfg) == zariski_oracle(cfg), describe(cfg));
  return c;
}

Check criterion_z2() {
  Check c;
  for (const auto& cfg : square_zero_corpus()) {
    const auto z = zariski_decompose(cfg);
    const auto& l = z.l;
    const std::string tag = describe(cfg);
    c.expect(std::all_of(l.begin(), l.end(), [](std::int64_t v) { return v > 0; }), tag + ": some l_i <= 0");
    c.expect(std::find(l.begin(), l.end(), 1) != l.end(), tag + ": no l_i = 1");
    c.expect(*z.m0 == *std::max_element(l.begin(), l.end()), tag + ": m0 != max l_i");
    if (canonical_square(cfg) < 0) {
      c.expect(*z.m0 > 1, tag + ": m0 = 1 with K^2 < 0");
      c.expect(std::adjacent_find(l.begin(), l.end(), std::not_equal_to<>()) != l.end(),
               tag + ": constant l with K^2 < 0");
    }
  }
  return c;
}

Check criterion_transport() {
  Check c;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto cfg = testgen::random_square_zero(rng, rng() % 2 == 0, 8);
    const auto up = blow_up_node(cfg, rng() % cfg.size(), rng() % 3 == 0);
    const auto z = zariski_decompose(up.config);
    c.expect(up.transported_l && z.l == *up.transported_l, describe(up.config));
  }
  return c;
}

Check criterion_smooth() {
  Check c;
  for (const auto& cfg : square_zero_corpus())
    for (std::size_t i = 0; i < cfg.size(); ++i)
      for (bool drop : {false, true})
        c.expect(zariski_decompose(blow_up_smooth(cfg, i, drop)).p.is_zero(),
                 describe(cfg) + " at " + std::to_string(i + 1));
  return c;
}

Check criterion_int1() {
  Check c;
  auto check_model = [&](const ResolvedModel& m, const std::string& tag) {
    const std::int64_t gap = m.l[0] - m.l[1];
    const std::size_t special = m.position(m.node1_bit == 0 ? "C[1,2]" : "C[1,1]");
    const std::size_t delta = m.position("Delta1");
    const std::int64_t sign = m.node1_bit == 0 ? -1 : 1;
    for (std::int64_t rho = -3; rho <= 3; ++rho)
      for (std::int64_t r = -2; r <= 2; ++r) {
        const auto d = m_class_intersections(m, {r, rho});
        c.expect(d[special].degree == sign * rho * gap && d[delta].degree == -sign * rho * gap,
                 tag + " rho = " + std::to_string(rho));
      }
  };
  const auto fixture_c = build_resolved_model(pencil(CycleConfig::real({-1, -4}, 5), PicZeroFamily::nonconstant()));
  c.expect(fixture_c.node1_bit == 0 && fixture_c.l[0] - fixture_c.l[1] == 1, "fixture C model");
  check_model(fixture_c, "fixture C");
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto p = testgen::random_normalized_pencil(rng);
    check_model(build_resolved_model(p), describe(p.cycle()));
  }
  return c;
}

Check criterion_chi() {
  Check c;
  for (const auto& cfg : square_zero_corpus()) {
    const auto l = zariski_decompose(cfg).l;
    for (long tau = 1; tau <= 5; ++tau) {
      const auto d = QDivisor::from_integers(l) * Rational(tau) - QDivisor::all_ones(cfg.size());
      c.expect(riemann_roch_chi(cfg, d) == 1, describe(cfg) + " tau = " + std::to_string(tau));
    }
  }
  return c;
}

Check criterion_decision_table() {
  Check c;
  struct Row {
    const char* file;
    const char* verdict;
    int code;
  };
  const Row rows[] = {{"fixtureA-constfinite.cfg", "a2", exit_ok},
                      {"fixtureC-nonconstant.cfg", "a1", exit_ok},
                      {"fixtureC-constfinite.cfg", "inconsistent", exit_inconsistent},
                      {"fixtureE.cfg", "a3", exit_ok}};
  for (const auto& row : rows) {
    std::ostringstream out;
    const int code = run({"adim", "--file", data(row.file), "--json"}, out);
    const Json report = Json::parse(out.str());
    c.expect(code == row.code, std::string(row.file) + ": exit " + std::to_string(code));
    c.expect(report.value("verdict", "") == row.verdict, std::string(row.file) + ": verdict");
    if (row.code == exit_inconsistent) {
      const auto& d = report["derivations"];
      c.expect(d.size() == 2 && d[0]["holds"] == true && d[1]["holds"] == true, "twin derivations");
      for (const auto& derivation : d)
        for (const auto& step : derivation["steps"]) c.expect(step["holds"] == true, step.value("step", ""));
    }
  }
  return c;
}

Check criterion_blow_down() {
  Check c;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto base = testgen::random_walk(rng, 9);
    const auto up = blow_up_node(base, rng() % base.size(), true);
    const auto down = blow_down(up.config, up.inserted.front(), true);
    const bool before = definiteness(intersection_matrix(up.config)).kind == Definiteness::negative_definite;
    const bool after = definiteness(intersection_matrix(down)).kind == Definiteness::negative_definite;
    c.expect(before == after && zariski_decompose(up.config).p.is_zero() == zariski_decompose(down).p.is_zero(),
             describe(up.config));
  }
  return c;
}

Check criterion_determinism() {
  Check c;
  std::ostringstream a, b;
  const int ca = run({"fixtures", "--seed", "1", "--count", "50"}, a);
  const int cb = run({"fixtures", "--seed", "1", "--count", "50"}, b);
  c.expect(ca == 0 && cb == 0, "exit status");
  c.expect(!a.str().empty() && a.str() == b.str(), "outputs differ");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"k=1 real cycles for n = 5..12: negdef, P = 0, kappa 0, a1", criterion_cycle2},
      {"zariski_decompose equals the subset oracle", criterion_oracle},
      {"l_i > 0, some l_i = 1, m0 = max l_i, nonconstant l when K^2 < 0", criterion_z2},
      {"node blow-up coefficient transport", criterion_transport},
      {"smooth blow-ups kill the nef part", criterion_smooth},
      {"M(r,rho) against C[1,2] and Delta1", criterion_int1},
      {"chi(tau m0 P - C) = 1", criterion_chi},
      {"adim decision table and exit codes", criterion_decision_table},
      {"definiteness across component contractions", criterion_blow_down},
      {"fixture generation is byte-identical", criterion_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.first_failure = std::string("exception: ") + e.what();
    }
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << c.cases
              << " cases)";
    if (!c.ok) std::cout << "  first failure: " << c.first_failure;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
