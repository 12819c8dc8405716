#include "mdl/duality.hpp"

#include <stdexcept>

#include "mdl/coideal.hpp"

namespace mdl {

Rational duality_msasep(const Config& eta, const Config& xi, int n,
                        const Rational& q, MschReading reading) {
  if (eta.size() != xi.size())
    throw std::invalid_argument("duality_msasep: size mismatch");
  const Config& counted = reading == MschReading::EtaCounts ? eta : xi;
  long exponent = 0;
  for (std::size_t p = 0; p < xi.size(); ++p) {
    int k = xi[p];
    if (k < 1) continue;
    if (eta[p] < k) return Rational(0);
    long site = static_cast<long>(p) + 1;
    long count = 0;
    for (int j = k; j <= n; ++j) count += right_count(counted, p, j);
    exponent += -2 * site - 2 * count;
  }
  return rational_pow(q, exponent);
}

Rational duality_msasep_left(const Config& eta, const Config& xi, int n,
                             const Rational& q) {
  if (eta.size() != xi.size())
    throw std::invalid_argument("duality_msasep_left: size mismatch");
  Rational value(1);
  for (std::size_t p = 0; p < xi.size(); ++p) {
    int k = xi[p];
    if (k < 1) continue;
    if (eta[p] < k) return Rational(0);
    long site = static_cast<long>(p) + 1;
    long count = 0;
    for (int j = k; j <= n; ++j) count += left_count(eta, p, j);
    value *= rational_pow(q, -2 * site + 2 * count);
  }
  return value;
}

Rational duality_open(const Config& eta, const Config& xi, const Rational& q,
                      const Rational& Q) {
  if (eta.size() != xi.size())
    throw std::invalid_argument("duality_open: size mismatch");
  for (int v : eta)
    if (v < -1 || v > 1)
      throw std::invalid_argument("duality_open: only defined for r = 1");
  long a1_eta = 0;
  for (std::size_t p = 0; p < eta.size(); ++p)
    if (eta[p] == 1) ++a1_eta;

  long q_exp = 0, qq_exp = 0;
  long a1_xi = 0, am1_xi = 0;
  for (std::size_t p = 0; p < xi.size(); ++p) {
    long site = static_cast<long>(p);  // open lattice starts at site 0
    if (xi[p] == 1) {
      if (eta[p] != 1) return Rational(0);
      ++a1_xi;
      qq_exp -= 2;
      q_exp += -2 * site - 2 * right_count(eta, p, 1);
    } else if (xi[p] == -1) {
      if (eta[p] != -1) return Rational(0);
      ++am1_xi;
      q_exp += 2 * site - 2 * left_count(eta, p, -1);
      q_exp += 2 * right_count(xi, p, 1);
    }
  }
  q_exp += -2 * am1_xi * a1_eta;
  q_exp += a1_xi * (a1_xi - 1);
  return rational_pow(q, q_exp) * rational_pow(Q, qq_exp);
}

Rational duality_braided(const Config& eta, const Config& xi, long m,
                         const Rational& q, BinomialConvention convention) {
  if (eta.size() != xi.size())
    throw std::invalid_argument("duality_braided: size mismatch");
  Rational value(1);
  for (std::size_t p = 0; p < xi.size(); ++p) {
    if (xi[p] == 0) continue;
    if (eta[p] < xi[p]) return Rational(0);
    Rational binom_ratio = q_binomial(eta[p], xi[p], q, convention) /
                           q_binomial(m, xi[p], q, convention);
    long pos = static_cast<long>(p);  // position counted from 0
    value *= binom_ratio *
             rational_pow(q, xi[p] * (-2 * m * pos + 2 * left_occupancy(eta, p)));
  }
  return value;
}

OperatorMatrix duality_matrix(const StateSpace& space, const QParams& params) {
  params.validate();
  OperatorMatrix d(space.size(), space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    Config eta = space.config_of(i);
    for (std::size_t j = 0; j < space.size(); ++j) {
      Config xi = space.config_of(j);
      switch (space.model()) {
        case Model::MultiSpecies:
          d.at(i, j) = duality_msasep(eta, xi, space.param(), params.q);
          break;
        case Model::Open:
          if (space.param() != 1)
            throw std::invalid_argument("duality_matrix: open duality needs r = 1");
          if (!params.Q)
            throw std::invalid_argument("duality_matrix: open duality needs Q");
          d.at(i, j) = duality_open(eta, xi, params.q, *params.Q);
          break;
        case Model::Braided:
          d.at(i, j) = duality_braided(eta, xi, space.param(), params.q);
          break;
      }
    }
  }
  return d;
}

OperatorMatrix duality_open_from_symmetry(long L, const Rational& q,
                                          const Rational& Q) {
  GroundFrame frame = build_ground_frame(L, q, Q);
  const StateSpace& space = frame.space;
  const std::size_t n = space.size();

  // Σ_d ([d]_{q^{-2}}!)^{-1} S^d; S is nilpotent, particle number grows
  // by one per application.
  OperatorMatrix s = coproduct_f_half(L, q, Q);
  OperatorMatrix total = OperatorMatrix::identity(n);
  OperatorMatrix power = OperatorMatrix::identity(n);
  const Rational qinv = Rational(1) / q;
  for (long d = 1; d <= 2 * (L + 1); ++d) {
    power = power * s;
    if (power.is_zero()) break;
    total = total + power.scaled(Rational(1) / q_factorial(d, qinv));
  }

  auto particle_count = [&](std::size_t idx) {
    Config c = space.config_of(idx);
    long d = 0;
    for (int v : c)
      if (v != 0) ++d;
    return d;
  };

  OperatorMatrix d_matrix(n, n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    long dxi = particle_count(xi);
    Rational scale = rational_pow(q, 2 * L * dxi - dxi * (dxi - 1));
    for (std::size_t eta = 0; eta < n; ++eta) {
      // total's (xi, eta) entry is the amplitude from xi up to eta
      const Rational& amp = total.at(xi, eta);
      if (amp == 0) continue;
      d_matrix.at(eta, xi) =
          scale * amp / (frame.g[eta] * frame.g[xi]);
    }
  }
  return d_matrix;
}

}  // namespace mdl
