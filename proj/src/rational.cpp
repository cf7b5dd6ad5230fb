#include "anticanon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace anticanon {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("not an integer: " + to_string(q));
  return to_int64(Integer(q.get_num()));
}

Integer common_denominator(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace anticanon
