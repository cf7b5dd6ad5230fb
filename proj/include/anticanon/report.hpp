// Structured reports: one JSON document per command, rendered either as JSON
// or as flattened `path: value` lines.
#pragma once

#include <string>

#include "json.hpp"

#include "anticanon/birational.hpp"
#include "anticanon/cycles.hpp"
#include "anticanon/twistor.hpp"

namespace anticanon {

using Json = nlohmann::ordered_json;

/// Rationals are strings `p/q`; integers are JSON numbers.
Json to_json(const QDivisor& d);
Json to_json(const CycleConfig& c);
/// Fields decomposition.p, decomposition.n, m0, l, d, negative_support (1-based).
Json to_json(const ZariskiDecomposition& z);
Json to_json(const DerivationStep& s);
Json to_json(const Derivation& d);
Json to_json(const Verdict& v);
Json to_json(const ReducibleFiber& f, std::size_t k);

/// Two-space indented JSON followed by a newline.
std::string render_json(const Json& report);
/// One line per leaf: dotted object paths, `[i]` for arrays of objects,
/// arrays of scalars as `(a, b, c)`, null as `none`.
std::string render_human(const Json& report);

}  // namespace anticanon
