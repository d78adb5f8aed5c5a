#include "domgreedy/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace domgreedy {

namespace {

bool is_digits(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_digits(num, true)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(Natural(num_str));
    return r;
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_digits(den, false)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  Natural d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r = Rational(Natural(num_str), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Natural ceil(const Rational& r) {
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// mpq_get_d truncates toward zero, so one step outward in each direction
// brackets the exact value.
double to_double_lower(const Rational& r) {
  const double d = r.get_d();
  if (Rational(d) <= r) return d;
  return std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double to_double_upper(const Rational& r) {
  const double d = r.get_d();
  if (Rational(d) >= r) return d;
  return std::nextafter(d, std::numeric_limits<double>::infinity());
}

}  // namespace domgreedy
