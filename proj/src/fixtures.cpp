#include "anticanon/fixtures.hpp"

#include <random>

#include "anticanon/birational.hpp"
#include "anticanon/config_file.hpp"

namespace anticanon {

std::vector<CycleConfig> generate_fixtures(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CycleConfig> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const bool real = rng() % 2 == 1;
    CycleConfig c = real ? CycleConfig::real({-2, -2}, 4) : CycleConfig::plain({-2, -2, -2, -2});
    const std::uint64_t steps = real ? rng() % 4 : rng() % 7;
    for (std::uint64_t s = 0; s < steps; ++s) c = blow_up_node(c, rng() % c.size()).config;
    out.push_back(std::move(c));
  }
  return out;
}

std::string render_fixtures(std::uint64_t seed, const std::vector<CycleConfig>& fixtures) {
  std::string out;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    out += "# fixture " + std::to_string(i + 1) + " seed " + std::to_string(seed) + "\n";
    out += render_config(from_cycle(fixtures[i]));
  }
  return out;
}

}  // namespace anticanon
