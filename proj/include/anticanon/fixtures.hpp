// Deterministic corpus of cycle configurations with P ≠ 0 and P² = 0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anticanon/cycles.hpp"

namespace anticanon {

/// Each fixture starts from the 4-cycle of (−2)-curves and applies random node
/// blow-ups: up to 6 without real structure, or up to 3 conjugate pairs on the
/// real version (n = 4). Always m ≤ 10. Same seed, same list.
std::vector<CycleConfig> generate_fixtures(std::uint64_t seed, std::size_t count);

/// Concatenated config files, each preceded by `# fixture <i> seed <seed>`.
std::string render_fixtures(std::uint64_t seed, const std::vector<CycleConfig>& fixtures);

}  // namespace anticanon
