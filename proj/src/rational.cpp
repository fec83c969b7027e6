#include "nwalk/rational.hpp"

#include <algorithm>
#include <cctype>

#include "nwalk/errors.hpp"

namespace nwalk {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational r;
  r.get_num() = Integer(n, 10);
  r.get_den() = Integer(std::string(den), 10);
  if (r.get_den() == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer common_denominator(std::span<const Rational> values) {
  Integer d = 1;
  for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

}  // namespace nwalk
