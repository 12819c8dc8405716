#include "mdl/qnum.hpp"

namespace mdl {

Rational q_int(long n, const Rational& q) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  if (q == 1) throw std::domain_error("q_int: q = 1 not allowed");
  Rational q2 = q * q;
  return (Rational(1) - rational_pow(q2, n)) / (Rational(1) - q2);
}

Rational q_factorial(long n, const Rational& q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  Rational acc(1);
  for (long i = 1; i <= n; ++i) acc *= q_int(i, q);
  return acc;
}

static long ordinary_binomial(long n, long k) {
  long acc = 1;
  for (long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

Rational q_binomial(long n, long k, const Rational& q,
                    BinomialConvention convention) {
  if (k < 0 || k > n) return Rational(0);
  Rational value;
  if (q == 1) {
    value = Rational(ordinary_binomial(n, k));
  } else {
    value = q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
  }
  if (convention == BinomialConvention::Symmetric)
    value *= rational_pow(q, -k * (n - k));
  return value;
}

Rational q_pochhammer(const Rational& a, const Rational& base, long n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
  Rational acc(1);
  Rational term = a;
  for (long i = 0; i < n; ++i) {
    acc *= Rational(1) - term;
    term *= base;
  }
  return acc;
}

void QParams::validate() const {
  if (!in_open_unit_interval(q))
    throw std::invalid_argument("QParams: q must lie in (0,1)");
  if (Q && !in_open_unit_interval(*Q))
    throw std::invalid_argument("QParams: Q must lie in (0,1)");
  if (m && *m < 1) throw std::invalid_argument("QParams: m must be >= 1");
}

}  // namespace mdl
