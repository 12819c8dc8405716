#pragma once

#include <optional>

#include "mdl/rational.hpp"

namespace mdl {

/// q-deformed integer [n]_{q^2} = (1 - q^{2n}) / (1 - q^2)
///                              = 1 + q^2 + ... + q^{2(n-1)}.
/// Requires n >= 0 and q != 1 (use the limit value n directly if needed).
Rational q_int(long n, const Rational& q);

/// [n]_{q^2}! = [1]_{q^2} [2]_{q^2} ... [n]_{q^2}, with [0]! = 1.
Rational q_factorial(long n, const Rational& q);

enum class BinomialConvention { Standard, Symmetric };

/// q-deformed binomial coefficient.
///   Standard:  [n]!/([k]![n-k]!) with all factorials at q^2,
///   Symmetric: Standard * q^{-k(n-k)}.
/// Returns 0 when k < 0 or k > n. At q = 1 returns the ordinary binomial
/// (the formula's limit).
Rational q_binomial(long n, long k, const Rational& q,
                    BinomialConvention convention = BinomialConvention::Standard);

/// (a; base)_n = (1 - a)(1 - a*base)...(1 - a*base^{n-1}); n = 0 gives 1.
Rational q_pochhammer(const Rational& a, const Rational& base, long n);

/// Evaluation-point bundle: q always, Q for the open model, m for the
/// braided model.
struct QParams {
  Rational q;
  std::optional<Rational> Q;
  std::optional<long> m;

  // Throws std::invalid_argument unless 0 < q < 1, 0 < Q < 1 when
  // present, and m >= 1 when present.
  void validate() const;
};

}  // namespace mdl
