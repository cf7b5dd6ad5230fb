#include "anticanon/birational.hpp"

#include <algorithm>

#include "anticanon/errors.hpp"

namespace anticanon {

std::string_view to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::blow_up_node: return "blow_up_node";
    case SurgeryKind::blow_up_smooth: return "blow_up_smooth";
    case SurgeryKind::blow_down: return "blow_down";
  }
  return "blow_up_node";
}

namespace {

// Single-point node blow-up on a plain list of self-intersections. Returns the
// insertion position of the exceptional curve.
std::size_t insert_at_node(std::vector<std::int64_t>& selfs, std::size_t node) {
  const std::size_t m = selfs.size();
  if (m == 1) {
    // The node has multiplicity 2 on C₁.
    selfs[0] -= 4;
    selfs.push_back(-1);
    return 1;
  }
  selfs[node] -= 1;
  selfs[(node + 1) % m] -= 1;
  selfs.insert(selfs.begin() + static_cast<std::ptrdiff_t>(node + 1), -1);
  return node + 1;
}

void insert_coefficient(std::vector<std::int64_t>& l, std::size_t node) {
  const std::size_t m = l.size();
  l.insert(l.begin() + static_cast<std::ptrdiff_t>(node + 1), l[node] + l[(node + 1) % m]);
}

void remove_component(std::vector<std::int64_t>& selfs, std::size_t i) {
  const std::size_t m = selfs.size();
  if (m == 2) {
    // (π_*C)² = C² + (C·E)² with C·E = 2.
    selfs[1 - i] += 4;
  } else {
    selfs[(i + m - 1) % m] += 1;
    selfs[(i + 1) % m] += 1;
  }
  selfs.erase(selfs.begin() + static_cast<std::ptrdiff_t>(i));
}

void check_index(const CycleConfig& c, std::size_t i, const char* what) {
  if (i >= c.size())
    throw PreconditionError(std::string(what) + " index " + std::to_string(i + 1) + " out of range 1.." +
                            std::to_string(c.size()));
}

bool nef_with_vanishing_square(const ZariskiDecomposition& z) { return !z.p.is_zero() && z.d == 0; }

}  // namespace

NodeBlowUp blow_up_node(const CycleConfig& c, std::size_t node, bool drop_reality) {
  require_valid(c);
  check_index(c, node, "node");

  std::optional<std::vector<std::int64_t>> l;
  if (auto z = zariski_decompose(c); nef_with_vanishing_square(z)) l = z.l;

  NodeBlowUp out;
  out.config.self_ints = c.self_ints;
  if (c.is_real() && !drop_reality) {
    const std::size_t k = *c.real_k;
    const std::size_t j = node % k;
    // Conjugate node first so the lower insertion position stays put.
    std::size_t second = insert_at_node(out.config.self_ints, j + k);
    std::size_t first = insert_at_node(out.config.self_ints, j);
    second += 1;
    if (l) {
      insert_coefficient(*l, j + k);
      insert_coefficient(*l, j);
    }
    out.inserted = {first, second};
    out.config.real_k = k + 1;
    out.config.n = c.n ? std::optional<std::int64_t>(*c.n + 1) : std::nullopt;
  } else {
    out.inserted = {insert_at_node(out.config.self_ints, node)};
    if (l) {
      if (l->size() == 1)
        l->push_back(2 * l->front());
      else
        insert_coefficient(*l, node);
    }
  }
  out.transported_l = std::move(l);
  return out;
}

CycleConfig blow_up_smooth(const CycleConfig& c, std::size_t component, bool drop_reality) {
  require_valid(c);
  check_index(c, component, "component");
  CycleConfig out = CycleConfig::plain(c.self_ints);
  out.self_ints[component] -= 1;
  if (c.is_real() && !drop_reality) {
    out.self_ints[c.conjugate(component)] -= 1;
    out.real_k = c.real_k;
    out.n = c.n ? std::optional<std::int64_t>(*c.n + 1) : std::nullopt;
  }
  return out;
}

CycleConfig blow_down(const CycleConfig& c, std::size_t component, bool drop_reality) {
  require_valid(c);
  check_index(c, component, "component");
  if (c.size() < 2) throw PreconditionError("cannot contract the nodal curve of a 1-cycle");
  if (c.self_ints[component] != -1)
    throw PreconditionError("C" + std::to_string(component + 1) + "^2 = " +
                            std::to_string(c.self_ints[component]) + ", blow-down needs a (-1)-curve");

  CycleConfig out = CycleConfig::plain(c.self_ints);
  if (c.is_real() && !drop_reality) {
    const std::size_t k = *c.real_k;
    if (k == 1)
      throw PreconditionError("conjugate components of a real 2-cycle meet; contract with reality dropped");
    std::size_t conj = c.conjugate(component);
    remove_component(out.self_ints, component);
    if (conj > component) --conj;
    remove_component(out.self_ints, conj);
    out.real_k = k - 1;
    out.n = c.n ? std::optional<std::int64_t>(*c.n - 1) : std::nullopt;
  } else {
    remove_component(out.self_ints, component);
  }
  return out;
}

std::optional<NefModel> contract_to_nef_model(const CycleConfig& c) {
  require_valid(c);
  NefModel model{CycleConfig::plain(c.self_ints), {}};
  for (;;) {
    auto z = zariski_decompose(model.config);
    if (z.p.is_zero()) return std::nullopt;
    if (z.n_part.is_zero()) return model;
    const auto& selfs = model.config.self_ints;
    auto it = std::find(selfs.begin(), selfs.end(), -1);
    if (it == selfs.end() || selfs.size() < 2) return std::nullopt;
    const auto i = static_cast<std::size_t>(it - selfs.begin());
    CycleConfig next = blow_down(model.config, i);
    model.steps.push_back({SurgeryKind::blow_down, i, model.config, next});
    model.config = std::move(next);
  }
}

}  // namespace anticanon
