#include <random>

#include "doctest.h"

#include "anticanon/birational.hpp"
#include "anticanon/errors.hpp"
#include "anticanon/fixtures.hpp"
#include "support/generators.hpp"

using namespace anticanon;

namespace {

const CycleConfig fixture_a = CycleConfig::real({-2}, 4);
const CycleConfig fixture_b = CycleConfig::real({-3}, 5);
const CycleConfig fixture_c = CycleConfig::real({-1, -4}, 5);
const CycleConfig fixture_d = CycleConfig::plain({-3, -1, -3});

bool p_zero(const CycleConfig& c) { return zariski_decompose(c).p.is_zero(); }

}  // namespace

TEST_CASE("node blow-ups") {
  auto a = blow_up_node(fixture_a, 0, true);
  CHECK(a.config == fixture_d);
  CHECK(a.inserted == std::vector<std::size_t>{1});
  CHECK(a.transported_l == std::vector<std::int64_t>{1, 2, 1});
  CHECK(zariski_decompose(a.config).l == std::vector<std::int64_t>{1, 2, 1});

  auto c = blow_up_node(fixture_c, 0, true);
  CHECK(c.config.self_ints == std::vector<std::int64_t>{-2, -1, -5, -1, -4});
  CHECK(c.transported_l == std::vector<std::int64_t>{2, 3, 1, 2, 1});
  const auto zc = zariski_decompose(c.config);
  CHECK(zc.m0 == 3);
  CHECK(zc.l == std::vector<std::int64_t>{2, 3, 1, 2, 1});

  for (std::size_t node : {0, 1}) {
    auto b = blow_up_node(fixture_b, node, true);
    CHECK(b.config.size() == 3);
    CHECK(p_zero(b.config));
    CHECK_FALSE(b.transported_l);
  }

  auto nodal = blow_up_node(CycleConfig::plain({9}), 0);
  CHECK(nodal.config == CycleConfig::plain({5, -1}));

  auto real = blow_up_node(fixture_c, 0);
  CHECK(real.config == CycleConfig::real({-2, -1, -5}, 6));
  CHECK(real.inserted == std::vector<std::size_t>{1, 4});
  CHECK(validate(real.config).empty());
}

TEST_CASE("smooth blow-ups") {
  CHECK(blow_up_smooth(fixture_a, 0, true) == CycleConfig::plain({-3, -2}));
  CHECK(definiteness(intersection_matrix(CycleConfig::plain({-3, -2}))).kind == Definiteness::negative_definite);
  CHECK(p_zero(CycleConfig::plain({-3, -2})));

  auto c = blow_up_smooth(fixture_c, 1, true);
  CHECK(c == CycleConfig::plain({-1, -5, -1, -4}));
  CHECK(p_zero(c));

  CHECK(blow_up_smooth(fixture_b, 0, true) == CycleConfig::plain({-4, -3}));

  auto real = blow_up_smooth(fixture_c, 1);
  CHECK(real == CycleConfig::real({-1, -5}, 6));
  CHECK(validate(real).empty());
}

TEST_CASE("blow-downs") {
  CHECK(blow_down(fixture_d, 1) == CycleConfig::plain({-2, -2}));
  CHECK(blow_down(CycleConfig::plain({-5, -1}), 1) == CycleConfig::plain({-1}));
  CHECK_THROWS_AS(blow_down(fixture_c, 1), PreconditionError);
  CHECK_THROWS_AS(blow_down(CycleConfig::plain({-1}), 0), PreconditionError);
  CHECK_THROWS_AS(blow_down(CycleConfig::real({-1}, 3), 0), PreconditionError);
  CHECK(blow_down(CycleConfig::real({-1}, 3), 0, true) == CycleConfig::plain({3}));
}

TEST_CASE("contraction to a nef model") {
  auto d = contract_to_nef_model(fixture_d);
  REQUIRE(d);
  CHECK(d->config == CycleConfig::plain({-2, -2}));
  CHECK(d->steps.size() == 1);

  auto a = contract_to_nef_model(fixture_a);
  REQUIRE(a);
  CHECK(a->config == CycleConfig::plain({-2, -2}));
  CHECK(a->steps.empty());

  CHECK_FALSE(contract_to_nef_model(fixture_b));
}

TEST_CASE("round trips and bookkeeping over random configs") {
  std::mt19937_64 rng(1234);
  std::vector<CycleConfig> configs{fixture_a, fixture_b, fixture_c, fixture_d};
  for (int i = 0; i < 200; ++i) configs.push_back(testgen::random_walk(rng));
  for (const auto& c : configs) {
    const auto node = rng() % c.size();
    const auto up = blow_up_node(c, node);
    const auto drop = c.is_real() ? 2 : 1;
    CHECK(canonical_square(up.config) == canonical_square(c) - drop);
    CHECK(blow_down(up.config, up.inserted.front()) == c);
    CHECK(validate(up.config).empty());

    const auto smooth = blow_up_smooth(c, rng() % c.size());
    CHECK(canonical_square(smooth) == canonical_square(c) - drop);
    CHECK(validate(smooth).empty());

    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.self_ints[i] != -1 || c.size() < 2 || (c.is_real() && *c.real_k == 1)) continue;
      const auto down = blow_down(c, i);
      CHECK(canonical_square(down) == canonical_square(c) + drop);
      CHECK(validate(down).empty());
    }
  }
}

TEST_CASE("transport and Pzero over node blow-ups") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto c = testgen::random_square_zero(rng, i % 2 == 1, 8);
    const auto up = blow_up_node(c, rng() % c.size(), rng() % 2 == 0);
    REQUIRE(up.transported_l);
    CHECK(zariski_decompose(up.config).l == *up.transported_l);

    const auto smooth = blow_up_smooth(c, rng() % c.size(), rng() % 2 == 0);
    CHECK(p_zero(smooth));
  }
}

TEST_CASE("definiteness survives contracting a cycle component") {
  std::mt19937_64 rng(31337);
  int negdef = 0;
  for (int i = 0; i < 100; ++i) {
    const auto base = testgen::random_walk(rng, 9);
    const auto up = blow_up_node(base, rng() % base.size(), true);
    const auto down = blow_down(up.config, up.inserted.front(), true);
    const bool before = definiteness(intersection_matrix(up.config)).kind == Definiteness::negative_definite;
    const bool after = definiteness(intersection_matrix(down)).kind == Definiteness::negative_definite;
    CHECK(before == after);
    CHECK(p_zero(up.config) == p_zero(down));
    negdef += before;
  }
  CHECK(negdef > 10);
}
