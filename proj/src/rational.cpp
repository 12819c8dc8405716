#include "mdl/rational.hpp"

namespace mdl {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  std::string s = text;
  if (s.find('/') == std::string::npos) s += "/1";
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return Rational(0);
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational r;
  if (e > 0)
    r = Rational(num, den);
  else
    r = Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace mdl
