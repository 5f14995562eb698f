#include "k3lat/rational.hpp"

#include <stdexcept>

namespace k3lat {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q = Rational(parse_integer(num), d);
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace k3lat
