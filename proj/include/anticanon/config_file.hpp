// Line-oriented `key = value` files describing a cycle or a twistor pencil.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anticanon/cycles.hpp"
#include "anticanon/pic0.hpp"
#include "anticanon/twistor.hpp"

namespace anticanon {

enum class BaseKind { cycle, elliptic };

/// Every key is optional in the file; absent keys stay empty so that
/// parse(render(f)) == f holds exactly.
struct ConfigFile {
  std::optional<std::int64_t> n;
  std::optional<BaseKind> base;
  std::optional<std::int64_t> k;
  /// Half of a real cycle; the conjugates are mirrored.
  std::optional<std::vector<std::int64_t>> self;
  /// Full list for a configuration without real structure.
  std::optional<std::vector<std::int64_t>> selfints;
  std::optional<PicZeroFamily> family;
  std::optional<std::vector<int>> resolution;

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// Throws ParseError naming the line for syntax errors, unknown or repeated
/// keys, and conflicting cycle keys.
ConfigFile parse_config(std::string_view text);
/// Reads and parses a file; ParseError with line 0 when it cannot be opened.
ConfigFile load_config(const std::string& path);
/// Keys in the order n, base, k, self, selfints, family, resolution.
std::string render_config(const ConfigFile& f);

std::string render_family(const PicZeroFamily& f);
PicZeroFamily parse_family(std::string_view text);

/// The cycle described by the file (not validated). Throws ParseError when the
/// file describes an elliptic base or no cycle at all.
CycleConfig to_cycle(const ConfigFile& f);
/// Missing family means nonconstant; missing resolution means all bits 0; a
/// missing n is taken from C² = 8 − 2n. Not validated.
TwistorPencil to_pencil(const ConfigFile& f);

ConfigFile from_cycle(const CycleConfig& c);
ConfigFile from_pencil(const TwistorPencil& p);

}  // namespace anticanon
