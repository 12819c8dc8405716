#include "mdl/coideal.hpp"

#include <stdexcept>

#include "mdl/hecke.hpp"

namespace mdl {

namespace {

OperatorMatrix diag3(const Rational& a, const Rational& b, const Rational& c) {
  OperatorMatrix m(3, 3);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

OperatorMatrix kron_power(const OperatorMatrix& m, long k) {
  OperatorMatrix out = OperatorMatrix::identity(1);
  for (long i = 0; i < k; ++i) out = kron(out, m);
  return out;
}

std::size_t vacuum_index(const StateSpace& space) {
  return space.index_of(Config(space.sites(), 0));
}

// row vector * row-convention matrix
std::vector<Rational> apply_row(const std::vector<Rational>& v,
                                const OperatorMatrix& m) {
  std::vector<Rational> out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& w = m.at(i, j);
      if (w != 0) out[j] += v[i] * w;
    }
  }
  return out;
}

}  // namespace

LocalQOperators local_q_operators(const Rational& q, const Rational& Q) {
  LocalQOperators ops;
  ops.e_lower = OperatorMatrix(3, 3);
  ops.e_lower.at(1, 0) = 1;  // u_0 -> u_{-1}
  ops.f_raise = OperatorMatrix(3, 3);
  ops.f_raise.at(1, 2) = 1;  // u_0 -> u_1
  const Rational qinv = Rational(1) / q;
  ops.k_plus = diag3(Rational(1), q, qinv);
  ops.k_minus = diag3(q, qinv, Rational(1));
  ops.k_minus_inv = diag3(qinv, q, Rational(1));
  ops.k_half = ops.k_plus * ops.k_minus_inv;
  // F first, then K^{-1}: row-convention product F * K^{-1}
  ops.kinv_f = ops.f_raise * ops.k_minus_inv;
  ops.f_half = ops.e_lower + ops.kinv_f.scaled(Q);
  return ops;
}

AOperators build_a_operators(long L, const Rational& q, const Rational& Q,
                             std::size_t cap) {
  if (L < 1) throw std::invalid_argument("build_a_operators: L must be >= 1");
  std::size_t dim = 1;
  for (long i = 0; i <= L; ++i) {
    if (dim > cap / 3) throw std::length_error("build_a_operators: state cap");
    dim *= 3;
  }
  LocalQOperators ops = local_q_operators(q, Q);
  AOperators a;
  a.a0 = kron(ops.f_half, kron_power(ops.k_minus_inv, L));
  a.a_plus.resize(static_cast<std::size_t>(L) + 1);
  a.a_minus.resize(static_cast<std::size_t>(L) + 1);
  for (long j = 1; j <= L; ++j) {
    std::size_t left = 1;
    for (long i = 0; i < j; ++i) left *= 3;
    a.a_plus[j] = kron(kron(OperatorMatrix::identity(left), ops.e_lower),
                       kron_power(ops.k_minus_inv, L - j));
    a.a_minus[j] = kron(kron(kron_power(ops.k_half, j), ops.kinv_f),
                        kron_power(ops.k_minus_inv, L - j))
                       .scaled(Q);
  }
  return a;
}

OperatorMatrix coproduct_f_half(long L, const Rational& q, const Rational& Q) {
  AOperators a = build_a_operators(L, q, Q);
  OperatorMatrix s = a.a0;
  for (long j = 1; j <= L; ++j) s = s + a.a_plus[j] + a.a_minus[j];
  return s;
}

Rational ground_g_formula(const Config& open_config, long L, const Rational& q,
                          const Rational& Q) {
  OpenSequenceForm seq = to_sequence_form(open_config);
  Rational g(1);
  for (long x : seq.x) {
    long right1 = right_count(open_config, static_cast<std::size_t>(x), 1);
    g *= Q * rational_pow(q, L + x - right1);
  }
  if (seq.z0 == 1) g *= Q * rational_pow(q, L - seq.d1());
  if (seq.z0 == -1) g *= rational_pow(q, L - seq.d1());
  for (long y : seq.y) {
    long right1 = right_count(open_config, static_cast<std::size_t>(y), 1);
    g *= rational_pow(q, L - y - right1);
  }
  return g;
}

Rational ground_g_site_form(const Config& open_config, long L,
                            const Rational& q, const Rational& Q) {
  long d1 = 0, d = 0;
  for (int v : open_config) {
    if (v == 1) ++d1;
    if (v != 0) ++d;
  }
  Rational g = rational_pow(Q, d1) * rational_pow(q, L * d);
  for (std::size_t p = 0; p < open_config.size(); ++p) {
    long right1 = right_count(open_config, p, 1);
    long site = static_cast<long>(p);
    if (open_config[p] == 1) g *= rational_pow(q, site - right1);
    if (open_config[p] == -1) g *= rational_pow(q, -site - right1);
  }
  return g;
}

Rational ground_g_from_word(const Config& open_config, long L,
                            const Rational& q, const Rational& Q) {
  StateSpace space(Model::Open, L, 1);
  if (!space.valid(open_config))
    throw std::invalid_argument("ground_g_from_word: invalid configuration");
  OpenSequenceForm seq = to_sequence_form(open_config);
  AOperators a = build_a_operators(L, q, Q);

  std::vector<Rational> v(space.size(), Rational(0));
  v[vacuum_index(space)] = 1;
  for (auto it = seq.x.rbegin(); it != seq.x.rend(); ++it)
    v = apply_row(v, a.a_minus[static_cast<std::size_t>(*it)]);
  if (seq.z0 != 0) v = apply_row(v, a.a0);
  for (long y : seq.y) v = apply_row(v, a.a_plus[static_cast<std::size_t>(y)]);
  return v[space.index_of(open_config)];
}

GroundFrame build_ground_frame(long L, const Rational& q, const Rational& Q,
                               std::size_t cap) {
  StateSpace space(Model::Open, L, 1, cap);
  const std::size_t legs = static_cast<std::size_t>(L) + 1;

  OperatorMatrix h =
      embed(hecke_type_b_boundary(1, Q), legs, 0, 1, 3).scaled(Q);
  OperatorMatrix bulk = hecke_type_b_bulk(1, q).scaled(q);
  for (long x = 1; x <= L; ++x)
    h = h + embed(bulk, legs, static_cast<std::size_t>(x) - 1, 2, 3);

  const std::size_t b0 = vacuum_index(space);
  Rational lambda = h.at(b0, b0);
  for (std::size_t j = 0; j < space.size(); ++j)
    if (j != b0 && h.at(b0, j) != 0)
      throw std::logic_error("build_ground_frame: vacuum is not an eigenvector");
  if (lambda != Rational(L + 1))
    throw std::logic_error("build_ground_frame: unexpected vacuum eigenvalue");

  GroundFrame frame{std::move(space), std::move(h), lambda, {}};
  frame.g.resize(frame.space.size());
  for (std::size_t i = 0; i < frame.space.size(); ++i) {
    Config c = frame.space.config_of(i);
    Rational from_word = ground_g_from_word(c, L, q, Q);
    Rational from_formula = ground_g_formula(c, L, q, Q);
    if (from_word != from_formula)
      throw std::logic_error("build_ground_frame: transform formula mismatch");
    frame.g[i] = from_formula;
  }
  return frame;
}

bool check_symmetry_commutation(long L, const Rational& q, const Rational& Q) {
  GroundFrame frame = build_ground_frame(L, q, Q);
  OperatorMatrix s = coproduct_f_half(L, q, Q);
  return commutator(frame.h, s).is_zero();
}

OperatorMatrix expand_symmetry_power(long L, long d, const Rational& q,
                                     const Rational& Q) {
  if (d < 0 || d > 2 * (L + 1))
    throw std::invalid_argument("expand_symmetry_power: d out of range");
  OperatorMatrix s = coproduct_f_half(L, q, Q);
  OperatorMatrix power = OperatorMatrix::identity(s.rows());
  for (long i = 0; i < d; ++i) power = power * s;
  return power.scaled(Rational(1) / q_factorial(d, q));
}

std::vector<Rational> reversible_measure_open(long L, const Rational& q,
                                              const Rational& Q) {
  GroundFrame frame = build_ground_frame(L, q, Q);
  std::vector<Rational> pi(frame.g.size());
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = frame.g[i] * frame.g[i];
  return pi;
}

}  // namespace mdl
