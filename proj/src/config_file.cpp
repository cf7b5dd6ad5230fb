#include "anticanon/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "anticanon/errors.hpp"

namespace anticanon {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(line, "expected a bracketed list like [1, 2, 3]");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename T>
std::string bracket(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

PicZeroFamily parse_family(std::string_view text) {
  const auto w = words(text);
  auto rational = [](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument&) {
      throw ParseError(0, "expected a rational p/q, got '" + s + "'");
    }
  };
  if (w.size() == 1 && w[0] == "nonconstant") return PicZeroFamily::nonconstant();
  if (w.size() == 3 && w[0] == "const" && w[1] == "unity")
    return PicZeroFamily::constant(PicZeroElement::root_of_unity(rational(w[2])));
  if (w.size() == 5 && w[0] == "const" && w[1] == "modulus" && w[3] == "angle") {
    const Rational modulus = rational(w[2]);
    if (modulus <= 0) throw ParseError(0, "modulus must be positive");
    return PicZeroFamily::constant(PicZeroElement(modulus, rational(w[4])));
  }
  throw ParseError(0, "family must be 'const unity p/q', 'const modulus a/b angle p/q' or 'nonconstant'");
}

std::string render_family(const PicZeroFamily& f) {
  if (!f.is_constant()) return "nonconstant";
  const auto& e = f.element();
  if (e.modulus() == 1) return "const unity " + to_string(e.angle());
  return "const modulus " + to_string(e.modulus()) + " angle " + to_string(e.angle());
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile f;
  std::size_t line_no = 0;
  std::size_t self_line = 0, selfints_line = 0, k_line = 0, base_line = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    auto once = [&](bool present) {
      if (present) throw ParseError(line_no, "duplicate key '" + key + "'");
    };
    if (key == "n") {
      once(f.n.has_value());
      f.n = parse_int(value, line_no);
    } else if (key == "k") {
      once(f.k.has_value());
      f.k = parse_int(value, line_no);
      k_line = line_no;
    } else if (key == "self") {
      once(f.self.has_value());
      f.self = parse_int_list(value, line_no);
      self_line = line_no;
    } else if (key == "selfints") {
      once(f.selfints.has_value());
      f.selfints = parse_int_list(value, line_no);
      selfints_line = line_no;
    } else if (key == "family") {
      once(f.family.has_value());
      try {
        f.family = parse_family(value);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "resolution") {
      once(f.resolution.has_value());
      std::vector<int> bits;
      for (auto b : parse_int_list(value, line_no)) {
        if (b != 0 && b != 1) throw ParseError(line_no, "resolution bits must be 0 or 1");
        bits.push_back(static_cast<int>(b));
      }
      f.resolution = std::move(bits);
    } else if (key == "base") {
      once(f.base.has_value());
      if (value == "cycle") f.base = BaseKind::cycle;
      else if (value == "elliptic") f.base = BaseKind::elliptic;
      else throw ParseError(line_no, "base must be 'cycle' or 'elliptic'");
      base_line = line_no;
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  if (f.self && f.selfints)
    throw ParseError(std::max(self_line, selfints_line), "'self' and 'selfints' are mutually exclusive");
  if (f.k && f.selfints) throw ParseError(std::max(k_line, selfints_line), "'k' cannot be combined with 'selfints'");
  if (f.k && f.self && *f.k != static_cast<std::int64_t>(f.self->size()))
    throw ParseError(k_line, "k = " + std::to_string(*f.k) + " but 'self' lists " + std::to_string(f.self->size()) +
                                 " entries");
  if (f.base == BaseKind::elliptic) {
    if (f.self || f.selfints || f.k)
      throw ParseError(base_line, "an elliptic base takes no 'k', 'self' or 'selfints'");
  } else if (!f.self && !f.selfints) {
    throw ParseError(line_no, "exactly one of 'self' or 'selfints' is required");
  }
  return f;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const ConfigFile& f) {
  std::string s;
  if (f.n) s += "n = " + std::to_string(*f.n) + "\n";
  if (f.base) s += std::string("base = ") + (*f.base == BaseKind::cycle ? "cycle" : "elliptic") + "\n";
  if (f.k) s += "k = " + std::to_string(*f.k) + "\n";
  if (f.self) s += "self = " + bracket(*f.self) + "\n";
  if (f.selfints) s += "selfints = " + bracket(*f.selfints) + "\n";
  if (f.family) s += "family = " + render_family(*f.family) + "\n";
  if (f.resolution) s += "resolution = " + bracket(*f.resolution) + "\n";
  return s;
}

CycleConfig to_cycle(const ConfigFile& f) {
  if (f.base == BaseKind::elliptic) throw ParseError(0, "the file describes an elliptic base, not a cycle");
  if (f.self) return CycleConfig::real(*f.self, f.n);
  if (f.selfints) {
    CycleConfig c = CycleConfig::plain(*f.selfints);
    c.n = f.n;
    return c;
  }
  throw ParseError(0, "the file describes no cycle");
}

TwistorPencil to_pencil(const ConfigFile& f) {
  TwistorPencil p;
  p.family = f.family.value_or(PicZeroFamily::nonconstant());
  if (f.base == BaseKind::elliptic) {
    if (!f.n) throw ParseError(0, "an elliptic base needs 'n'");
    if (!p.family.is_constant())
      throw ValidationError({"elliptic base: the family line must give the normal bundle as a constant element"});
    p.n = *f.n;
    p.base = EllipticBase{p.family.element()};
    return p;
  }
  CycleConfig c = to_cycle(f);
  if (c.is_real() && !c.n) c.n = ambient_n(c);
  if (!c.n) throw ParseError(0, "'n' is missing and cannot be read off C^2 = 8 - 2n");
  p.n = *c.n;
  p.resolution = f.resolution.value_or(std::vector<int>(c.real_k.value_or(0), 0));
  p.base = std::move(c);
  return p;
}

ConfigFile from_cycle(const CycleConfig& c) {
  ConfigFile f;
  f.n = c.n;
  if (c.is_real()) {
    f.k = static_cast<std::int64_t>(*c.real_k);
    f.self = std::vector<std::int64_t>(c.self_ints.begin(), c.self_ints.begin() + static_cast<std::ptrdiff_t>(*c.real_k));
  } else {
    f.selfints = c.self_ints;
  }
  return f;
}

ConfigFile from_pencil(const TwistorPencil& p) {
  ConfigFile f;
  if (p.is_elliptic()) {
    f.n = p.n;
    f.base = BaseKind::elliptic;
    f.family = p.family;
    return f;
  }
  f = from_cycle(p.cycle());
  f.n = p.n;
  f.base = BaseKind::cycle;
  f.family = p.family;
  f.resolution = p.resolution;
  return f;
}

}  // namespace anticanon
