#include "anticanon/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"

#include "anticanon/birational.hpp"
#include "anticanon/config_file.hpp"
#include "anticanon/errors.hpp"
#include "anticanon/fixtures.hpp"
#include "anticanon/report.hpp"
#include "anticanon/twistor.hpp"

namespace anticanon {

namespace {

struct Options {
  std::vector<std::string> files;
  std::optional<std::size_t> node;
  std::optional<std::size_t> component;
  std::optional<std::int64_t> rho;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> nu;
  bool smooth = false;
  bool drop_reality = false;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t count = 1;
};

struct Outcome {
  Json report;
  int code = exit_ok;
};

const std::string& single_file(const Options& o) {
  if (o.files.size() != 1) throw CLI::ValidationError("--file", "exactly one --file is required");
  return o.files.front();
}

std::size_t zero_based(std::size_t one_based, std::size_t size, const char* flag) {
  if (one_based < 1 || one_based > size)
    throw PreconditionError(std::string(flag) + " must lie in 1.." + std::to_string(size));
  return one_based - 1;
}

CycleConfig load_cycle(const Options& o) {
  CycleConfig c = to_cycle(load_config(single_file(o)));
  require_valid(c);
  return c;
}

TwistorPencil load_pencil(const Options& o) {
  TwistorPencil p = to_pencil(load_config(single_file(o)));
  require_valid(p);
  return p;
}

Json kodaira_json(Kodaira k) {
  switch (k) {
    case Kodaira::zero: return 0;
    case Kodaira::one: return 1;
    case Kodaira::two: return 2;
    case Kodaira::needs_order: break;
  }
  return std::string(to_string(k));
}

Outcome cmd_zariski(const Options& o) {
  const CycleConfig c = load_cycle(o);
  Json report{{"command", "zariski"}, {"config", to_json(c)}};
  report.update(to_json(zariski_decompose(c)));
  return {report};
}

Outcome cmd_classify(const Options& o) {
  const ConfigFile f = load_config(single_file(o));
  const CycleConfig c = to_cycle(f);
  require_valid(c);
  std::optional<Order> ord;
  if (f.family && f.family->is_constant()) ord = order(f.family->element());
  Json report{{"command", "classify"}, {"config", to_json(c)}};
  report.update(to_json(zariski_decompose(c)));
  report["order"] = ord ? Json(to_string(*ord)) : Json(nullptr);
  report["kodaira"] = kodaira_json(classify_kodaira(c, ord));
  return {report};
}

Outcome cmd_blowup(const Options& o) {
  const CycleConfig c = load_cycle(o);
  Json report{{"command", "blowup"}, {"before", to_json(c)}};
  if (o.smooth) {
    if (!o.component || o.node) throw CLI::ValidationError("--smooth", "--smooth needs --component and no --node");
    const auto i = zero_based(*o.component, c.size(), "--component");
    report["after"] = to_json(blow_up_smooth(c, i, o.drop_reality));
    return {report};
  }
  if (!o.node || o.component) throw CLI::ValidationError("--node", "blowup needs --node i, or --smooth --component i");
  const auto b = blow_up_node(c, zero_based(*o.node, c.size(), "--node"), o.drop_reality);
  report["after"] = to_json(b.config);
  Json inserted = Json::array();
  for (auto i : b.inserted) inserted.push_back(i + 1);
  report["inserted"] = inserted;
  report["transported_l"] = b.transported_l ? Json(*b.transported_l) : Json(nullptr);
  return {report};
}

Outcome cmd_blowdown(const Options& o) {
  const CycleConfig c = load_cycle(o);
  if (!o.component) throw CLI::ValidationError("--component", "blowdown needs --component i");
  const auto i = zero_based(*o.component, c.size(), "--component");
  return {Json{{"command", "blowdown"}, {"before", to_json(c)}, {"after", to_json(blow_down(c, i, o.drop_reality))}}};
}

Outcome cmd_contract(const Options& o) {
  const CycleConfig c = load_cycle(o);
  const auto model = contract_to_nef_model(c);
  if (!model) throw PreconditionError("no nef model is reachable by contracting cycle components");
  Json steps = Json::array();
  for (const auto& s : model->steps)
    steps.push_back(Json{{"kind", std::string(to_string(s.kind))},
                         {"index", s.index + 1},
                         {"before", s.before.self_ints},
                         {"after", s.after.self_ints}});
  return {Json{{"command", "contract"}, {"before", to_json(c)}, {"steps", steps}, {"after", to_json(model->config)}}};
}

Outcome cmd_fibers(const Options& o) {
  const TwistorPencil p = load_pencil(o);
  Json fibers = Json::array();
  for (const auto& f : reducible_fibers(p)) fibers.push_back(to_json(f, p.k()));
  return {Json{{"command", "fibers"}, {"k", p.k()}, {"fibers", fibers}}};
}

/// Rotates to l₁ > l₂ only when needed.
ResolvedModel resolved(const TwistorPencil& p, bool& rotated) {
  const auto z = zariski_decompose(p.cycle());
  rotated = !z.l.empty() && z.l.size() > 1 && z.l[0] <= z.l[1];
  return build_resolved_model(rotated ? normalize_rotation(p) : p);
}

Json model_header(const ResolvedModel& m, bool rotated) {
  return Json{{"rotated", rotated}, {"config", to_json(m.base)}, {"m0", m.m0}, {"l", m.l}, {"resolution_bit", m.node1_bit}};
}

Outcome cmd_intnums(const Options& o) {
  const TwistorPencil p = load_pencil(o);
  if (p.is_elliptic()) throw PreconditionError("intnums needs a cycle base");
  if (!o.rho) throw CLI::ValidationError("--rho", "intnums needs --rho");
  bool rotated = false;
  const ResolvedModel m = resolved(p, rotated);
  Json report{{"command", "intnums"}};
  report.update(model_header(m, rotated));
  report["r"] = o.r.value_or(0);
  report["rho"] = *o.rho;
  Json degrees = Json::object();
  for (const auto& d : m_class_intersections(m, {o.r.value_or(0), *o.rho})) degrees[d.curve] = d.degree;
  report["intersections"] = degrees;
  return {report};
}

Outcome cmd_fixed(const Options& o) {
  const TwistorPencil p = load_pencil(o);
  if (p.is_elliptic()) throw PreconditionError("fixed needs a cycle base");
  bool rotated = false;
  const ResolvedModel m = resolved(p, rotated);
  std::int64_t rho = 0, r = 0;
  Json report{{"command", "fixed"}};
  report.update(model_header(m, rotated));
  if (o.nu) {
    const auto profile = family_profile(p.family);
    if (profile.kind != FamilyProfileKind::constant_finite)
      throw PreconditionError("--nu needs a constant family of finite order");
    rho = *o.nu * *profile.tau;
    r = o.r.value_or(rho * m.m0);
    report["nu"] = *o.nu;
    report["tau"] = *profile.tau;
    report["pluri_dim"] = pluri_system_dim(p, r, *o.nu);
  } else {
    if (!o.rho) throw CLI::ValidationError("--rho", "fixed needs --rho (and optionally --r) or --nu");
    rho = *o.rho;
    r = o.r.value_or(0);
  }
  report["r"] = r;
  report["rho"] = rho;
  const Derivation d = prove_E_fixed(m, r, rho);
  report["derivations"] = Json::array({to_json(d)});
  return {report};
}

Outcome cmd_adim(const Options& o) {
  const Verdict v = algebraic_dimension(load_pencil(o));
  Json report{{"command", "adim"}};
  report.update(to_json(v));
  return {report, v.value == AlgebraicDimension::inconsistent ? exit_inconsistent : exit_ok};
}

Json oracle_entry(const std::string& name, const CycleConfig& c, bool& agree) {
  require_valid(c);
  const auto fast = zariski_decompose(c);
  const auto slow = zariski_oracle(c);
  agree = fast == slow;
  return Json{{"input", name}, {"selfints", c.self_ints}, {"agree", agree}};
}

Outcome cmd_oracle_check(const Options& o) {
  Json entries = Json::array();
  std::size_t mismatches = 0;
  bool agree = true;
  if (!o.files.empty()) {
    std::vector<std::string> names = o.files;
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
      entries.push_back(oracle_entry(name, to_cycle(load_config(name)), agree));
      mismatches += !agree;
    }
  } else {
    const auto corpus = generate_fixtures(o.seed, o.count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      entries.push_back(oracle_entry("fixture " + std::to_string(i + 1), corpus[i], agree));
      mismatches += !agree;
    }
  }
  Json report{{"command", "oracle-check"}, {"checked", entries.size()}, {"mismatches", mismatches}, {"results", entries}};
  return {report, mismatches == 0 ? exit_ok : exit_rejected};
}

void emit_error(std::ostream& out, bool json, const std::string& message, const std::vector<std::string>& diagnostics) {
  if (json) {
    out << render_json(Json{{"error", message}, {"diagnostics", diagnostics}});
    return;
  }
  out << "error: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Anti-canonical cycles, Zariski decompositions and twistor pencils", "anticanon"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* cmd) { cmd->add_option("--file", o.files, "configuration file")->required(); };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "structured output"); };
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of C");
  auto* classify = app.add_subcommand("classify", "anti-Kodaira dimension of the surface");
  auto* blowup = app.add_subcommand("blowup", "blow up a node or a smooth point of C");
  auto* blowdown = app.add_subcommand("blowdown", "contract a (-1)-component");
  auto* contract = app.add_subcommand("contract", "contract (-1)-components until C is nef");
  auto* fibers = app.add_subcommand("fibers", "reducible members of the pencil");
  auto* intnums = app.add_subcommand("intnums", "M(r,rho) against the cycle over lambda1");
  auto* fixed = app.add_subcommand("fixed", "is E a fixed component of |M(r,rho)|");
  auto* adim = app.add_subcommand("adim", "algebraic dimension of the twistor space");
  auto* oracle = app.add_subcommand("oracle-check", "compare the decomposition with the subset oracle");
  auto* fixtures = app.add_subcommand("fixtures", "print a seeded fixture corpus");

  for (auto* cmd : {zariski, classify, blowup, blowdown, contract, fibers, intnums, fixed, adim}) {
    add_file(cmd);
    add_json(cmd);
  }
  for (auto* cmd : {blowup, blowdown}) {
    cmd->add_option("--component", o.component, "component index (1-based)");
    cmd->add_flag("--drop-reality", o.drop_reality, "forget the real structure");
  }
  blowup->add_option("--node", o.node, "node index i, the point C_i ^ C_{i+1} (1-based)");
  blowup->add_flag("--smooth", o.smooth, "blow up a smooth point of --component");
  for (auto* cmd : {intnums, fixed}) {
    cmd->add_option("--rho", o.rho, "coefficient of m0 P");
    cmd->add_option("--r", o.r, "degree pulled back from the pencil base");
  }
  fixed->add_option("--nu", o.nu, "use rho = nu tau and r = nu tau m0");
  oracle->add_option("--file", o.files, "configuration files (repeatable)");
  for (auto* cmd : {oracle, fixtures}) {
    add_json(cmd);
    cmd->add_option("--seed", o.seed, "generator seed");
    cmd->add_option("--count", o.count, "number of fixtures")->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    emit_error(out, o.json, e.what(), {});
    return exit_invalid;
  }

  try {
    if (fixtures->parsed()) {
      const auto corpus = generate_fixtures(o.seed, o.count);
      if (!o.json) {
        out << render_fixtures(o.seed, corpus);
        return exit_ok;
      }
      Json list = Json::array();
      for (const auto& c : corpus) list.push_back(to_json(c));
      out << render_json(Json{{"command", "fixtures"}, {"seed", o.seed}, {"fixtures", list}});
      return exit_ok;
    }
    Outcome result;
    if (zariski->parsed()) result = cmd_zariski(o);
    else if (classify->parsed()) result = cmd_classify(o);
    else if (blowup->parsed()) result = cmd_blowup(o);
    else if (blowdown->parsed()) result = cmd_blowdown(o);
    else if (contract->parsed()) result = cmd_contract(o);
    else if (fibers->parsed()) result = cmd_fibers(o);
    else if (intnums->parsed()) result = cmd_intnums(o);
    else if (fixed->parsed()) result = cmd_fixed(o);
    else if (adim->parsed()) result = cmd_adim(o);
    else result = cmd_oracle_check(o);
    out << (o.json ? render_json(result.report) : render_human(result.report));
    return result.code;
  } catch (const CLI::ParseError& e) {
    emit_error(out, o.json, e.what(), {});
    return exit_invalid;
  } catch (const ParseError& e) {
    emit_error(out, o.json, e.what(), {});
    return exit_invalid;
  } catch (const ValidationError& e) {
    emit_error(out, o.json, "invalid configuration", e.diagnostics());
    if (!o.json)
      for (const auto& d : e.diagnostics()) out << "  " << d << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    emit_error(out, o.json, e.what(), {});
    return exit_rejected;
  }
}

}  // namespace anticanon
