#include <doctest.h>

#include "mdl/qnum.hpp"

using namespace mdl;

namespace {
const Rational kHalf = make_rational(1, 2);
}

TEST_CASE("q_int basic values") {
  CHECK(q_int(0, kHalf) == 0);
  CHECK(q_int(1, kHalf) == 1);
  CHECK(q_int(1, make_rational(2, 3)) == 1);
  // (1 - 2^-6)/(1 - 2^-2)
  CHECK(q_int(3, kHalf) == make_rational(21, 16));
  CHECK_THROWS(q_int(3, Rational(1)));
  CHECK_THROWS(q_int(-1, kHalf));
}

TEST_CASE("q_int equals the geometric sum term by term") {
  for (const Rational& q :
       {make_rational(1, 3), kHalf, make_rational(2, 3)}) {
    for (long n = 0; n <= 8; ++n) {
      Rational sum(0);
      for (long i = 0; i < n; ++i) sum += rational_pow(q, 2 * i);
      CHECK(q_int(n, q) == sum);
    }
  }
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0, kHalf) == 1);
  CHECK(q_factorial(1, kHalf) == 1);
  // 1 * 5/4 * 21/16
  CHECK(q_factorial(3, kHalf) == make_rational(105, 64));
}

TEST_CASE("q_binomial values and conventions") {
  CHECK(q_binomial(2, 3, kHalf) == 0);
  CHECK(q_binomial(3, -1, kHalf) == 0);
  CHECK(q_binomial(3, 0, kHalf) == 1);
  for (const Rational& q : {make_rational(1, 3), kHalf, make_rational(3, 5)}) {
    Rational q2 = q * q;
    CHECK(q_binomial(3, 2, q) == Rational(1) + q2 + q2 * q2);
    CHECK(q_binomial(3, 2, q, BinomialConvention::Symmetric) ==
          rational_pow(q, -2) + 1 + q2);
  }
  // ordinary binomial in the q = 1 limit
  CHECK(q_binomial(5, 2, Rational(1)) == 10);
}

TEST_CASE("q_binomial symmetry in both conventions") {
  for (const Rational& q : {make_rational(1, 3), kHalf}) {
    for (long n = 0; n <= 9; ++n)
      for (long k = 0; k <= n; ++k) {
        CHECK(q_binomial(n, k, q) == q_binomial(n, n - k, q));
        CHECK(q_binomial(n, k, q, BinomialConvention::Symmetric) ==
              q_binomial(n, n - k, q, BinomialConvention::Symmetric));
      }
  }
}

TEST_CASE("Pascal-type identity, standard convention") {
  for (const Rational& q :
       {make_rational(1, 3), kHalf, make_rational(2, 3)}) {
    for (long n = 1; n <= 12; ++n)
      for (long k = 0; k <= n; ++k)
        CHECK(q_binomial(n - 1, k - 1, q) +
                  rational_pow(q, 2 * k) * q_binomial(n - 1, k, q) ==
              q_binomial(n, k, q));
  }
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(make_rational(7, 5), kHalf, 0) == 1);
  CHECK(q_pochhammer(make_rational(7, 5), kHalf, 1) == make_rational(-2, 5));
  // a = q^{2(m-k2)} with m=2, k2=1, base q^{-2}, n=1, q=1/2
  Rational a = rational_pow(kHalf, 2);
  CHECK(q_pochhammer(a, rational_pow(kHalf, -2), 1) == make_rational(3, 4));
  // negative-power bases expand the factors upward
  CHECK(q_pochhammer(a, rational_pow(kHalf, -2), 2) ==
        make_rational(3, 4) * Rational(0));
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("1/2") == kHalf);
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("QParams validation") {
  QParams good{kHalf, make_rational(1, 3), 2};
  CHECK_NOTHROW(good.validate());
  QParams bad_q{Rational(1), {}, {}};
  CHECK_THROWS(bad_q.validate());
  QParams bad_m{kHalf, {}, 0};
  CHECK_THROWS(bad_m.validate());
}
