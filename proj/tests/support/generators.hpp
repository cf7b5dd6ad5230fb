// Seeded random cycle configurations for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "anticanon/birational.hpp"
#include "anticanon/cycles.hpp"
#include "anticanon/errors.hpp"
#include "anticanon/twistor.hpp"

namespace testgen {

using anticanon::CycleConfig;

inline std::vector<CycleConfig> nef_seeds() {
  return {CycleConfig::plain({9}),          CycleConfig::plain({1, 4}),
          CycleConfig::plain({1, 1, 1}),    CycleConfig::plain({0, 0, 0, 0}),
          CycleConfig::plain({2, 2}),       CycleConfig::plain({-2, -2, -2, -2}),
          CycleConfig::real({0, 0}, 0),     CycleConfig::real({2}, 0),
          CycleConfig::real({-2, -2}, 4),   CycleConfig::real({-2}, 4)};
}

/// Random walk of node blow-ups, smooth blow-ups and blow-downs from a nef
/// seed, staying within m <= max_m.
inline CycleConfig random_walk(std::mt19937_64& rng, std::size_t max_m = 10, int steps = 8) {
  const auto seeds = nef_seeds();
  CycleConfig c = seeds[rng() % seeds.size()];
  const std::size_t grow = c.is_real() ? 2 : 1;
  for (int s = 0; s < steps; ++s) {
    const auto move = rng() % 4;
    if (move <= 1 && c.size() + grow <= max_m) {
      c = anticanon::blow_up_node(c, rng() % c.size()).config;
    } else if (move == 2) {
      c = anticanon::blow_up_smooth(c, rng() % c.size());
    } else {
      std::vector<std::size_t> minus_one;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c.self_ints[i] == -1) minus_one.push_back(i);
      if (minus_one.empty()) continue;
      try {
        c = anticanon::blow_down(c, minus_one[rng() % minus_one.size()]);
      } catch (const anticanon::PreconditionError&) {
      }
    }
  }
  return c;
}

/// Node blow-ups of the (−2)-cycle keep P ≠ 0 and P² = 0.
inline CycleConfig random_square_zero(std::mt19937_64& rng, bool real, std::size_t max_m = 10) {
  CycleConfig c = real ? CycleConfig::real({-2, -2}, 4) : CycleConfig::plain({-2, -2, -2, -2});
  const std::size_t grow = real ? 2 : 1;
  const auto steps = rng() % (1 + (max_m - c.size()) / grow);
  for (std::uint64_t s = 0; s < steps; ++s) c = anticanon::blow_up_node(c, rng() % c.size()).config;
  return c;
}

/// A valid pencil with k >= 2, P ≠ 0, P² = 0 and l₁ > l₂, random resolution bits.
inline anticanon::TwistorPencil random_normalized_pencil(std::mt19937_64& rng) {
  while (true) {
    CycleConfig c = random_square_zero(rng, true, 12);
    if (c.self_ints.size() < 4) continue;
    anticanon::TwistorPencil p;
    p.n = *c.n;
    p.resolution.resize(*c.real_k);
    for (auto& b : p.resolution) b = static_cast<int>(rng() % 2);
    p.base = c;
    auto z = anticanon::zariski_decompose(c);
    if (z.l[0] > z.l[1]) return p;
    if (anticanon::canonical_square(c) < 0) return anticanon::normalize_rotation(p);
  }
}

}  // namespace testgen
