#include "anticanon/report.hpp"

namespace anticanon {

namespace {

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

std::string scalar(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& e : a)
    if (e.is_structured()) return false;
  return true;
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
    return;
  }
  if (j.is_array() && all_scalars(j)) {
    std::string s = "(";
    bool first = true;
    for (const auto& e : j) {
      s += (first ? "" : ", ") + scalar(e);
      first = false;
    }
    out += path + ": " + s + ")\n";
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path + ": " + scalar(j) + "\n";
}

}  // namespace

Json to_json(const QDivisor& d) {
  Json out = Json::array();
  for (const auto& c : d.coeffs) out.push_back(to_string(c));
  return out;
}

Json to_json(const CycleConfig& c) {
  Json out;
  out["selfints"] = c.self_ints;
  out["k"] = c.real_k ? Json(*c.real_k) : Json(nullptr);
  out["n"] = c.n ? Json(*c.n) : Json(nullptr);
  out["c2"] = canonical_square(c);
  return out;
}

Json to_json(const ZariskiDecomposition& z) {
  Json out;
  out["decomposition"]["p"] = to_json(z.p);
  out["decomposition"]["n"] = to_json(z.n_part);
  out["m0"] = z.m0 ? Json(*z.m0) : Json(nullptr);
  out["l"] = z.l;
  out["d"] = to_string(z.d);
  out["negative_support"] = one_based(z.negative_support);
  return out;
}

Json to_json(const DerivationStep& s) {
  return Json{{"step", s.step}, {"hypothesis", s.hypothesis}, {"evidence", s.evidence}, {"holds", s.holds}};
}

Json to_json(const Derivation& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(to_json(s));
  return Json{{"claim", d.claim}, {"holds", d.holds}, {"steps", steps}};
}

Json to_json(const Verdict& v) {
  Json out;
  out["verdict"] = std::string(to_string(v.value));
  out["kodaira"] = v.generic_kodaira;
  if (v.decomposition) out.update(to_json(*v.decomposition));
  out["justification"] = v.justification;
  Json derivations = Json::array();
  for (const auto& d : v.derivations) derivations.push_back(to_json(d));
  out["derivations"] = derivations;
  return out;
}

Json to_json(const ReducibleFiber& f, std::size_t k) {
  auto names = [k](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(component_name(i, k));
    return out;
  };
  return Json{{"index", f.index},
              {"plus", f.plus},
              {"minus", f.minus},
              {"twistor_line", f.twistor_line},
              {"line_points", Json::array({f.line_point, f.conjugate_line_point})},
              {"plus_half", names(f.plus_half)},
              {"minus_half", names(f.minus_half)}};
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_human(const Json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace anticanon
