// Blow-ups and blow-downs of a surface seen through its anti-canonical cycle.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "anticanon/cycles.hpp"

namespace anticanon {

enum class SurgeryKind { blow_up_node, blow_up_smooth, blow_down };

std::string_view to_string(SurgeryKind k);

struct SurgeryStep {
  SurgeryKind kind;
  std::size_t index;  // node or component index in `before`
  CycleConfig before;
  CycleConfig after;
};

struct NodeBlowUp {
  CycleConfig config;
  /// Positions of the new exceptional components in `config` (two for a
  /// real configuration, ascending).
  std::vector<std::size_t> inserted;
  /// m̃₀P̃ predicted by inserting lᵢ + l_{i+1} at the new slot; present only
  /// when the input has P ≠ 0 and P² = 0.
  std::optional<std::vector<std::int64_t>> transported_l;
};

/// Blows up node `node` (0-based), the point Cₙ ∩ C_{node+1 mod m}; for m = 1 the
/// node of the nodal curve. On a real configuration the conjugate node is
/// blown up too unless `drop_reality` is set (then the result is not real).
NodeBlowUp blow_up_node(const CycleConfig& c, std::size_t node, bool drop_reality = false);

/// Blows up a point of component `component` that is not a node of C.
CycleConfig blow_up_smooth(const CycleConfig& c, std::size_t component, bool drop_reality = false);

/// Contracts the (−1)-component `component`. Throws PreconditionError when
/// Cᵢ² ≠ −1, when m = 1, or for a real k = 1 configuration unless reality is dropped.
CycleConfig blow_down(const CycleConfig& c, std::size_t component, bool drop_reality = false);

struct NefModel {
  CycleConfig config;
  std::vector<SurgeryStep> steps;
};

/// Contracts the least-index (−1)-component until C is nef (N = 0). Absent
/// when P = 0 or when cycle components alone cannot reach a nef model; curves
/// outside the cycle are invisible to this data.
std::optional<NefModel> contract_to_nef_model(const CycleConfig& c);

}  // namespace anticanon
