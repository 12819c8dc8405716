#include "mdl/generators.hpp"

#include <sstream>

#include "mdl/fusion.hpp"
#include "mdl/qnum.hpp"

namespace mdl {

void SparseGenerator::add_rate(std::size_t from, std::size_t to,
                               const Rational& rate) {
  if (from >= size() || to >= size())
    throw std::out_of_range("SparseGenerator: state index out of range");
  if (rate < 0)
    throw std::invalid_argument("SparseGenerator: negative rate");
  if (from == to)
    throw std::invalid_argument("SparseGenerator: diagonal is implicit");
  if (rate == 0) return;
  rows_[from][to] += rate;
}

Rational SparseGenerator::rate(std::size_t from, std::size_t to) const {
  if (from == to) return diagonal(from);
  auto it = rows_[from].find(to);
  return it == rows_[from].end() ? Rational(0) : it->second;
}

Rational SparseGenerator::diagonal(std::size_t state) const {
  Rational sum(0);
  for (const auto& [to, r] : rows_[state]) sum += r;
  return -sum;
}

OperatorMatrix SparseGenerator::to_dense() const {
  OperatorMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, r] : rows_[i]) m.at(i, j) = r;
    m.at(i, i) = diagonal(i);
  }
  return m;
}

OperatorMatrix SparseGenerator::apply_left(const OperatorMatrix& d) const {
  if (d.rows() != size())
    throw std::invalid_argument("apply_left: dimension mismatch");
  OperatorMatrix out(size(), d.cols());
  for (std::size_t i = 0; i < size(); ++i) {
    Rational diag = diagonal(i);
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (diag != 0 && d.at(i, j) != 0) out.at(i, j) = diag * d.at(i, j);
    }
    for (const auto& [k, r] : rows_[i])
      for (std::size_t j = 0; j < d.cols(); ++j) {
        const Rational& v = d.at(k, j);
        if (v != 0) out.at(i, j) += r * v;
      }
  }
  return out;
}

OperatorMatrix SparseGenerator::apply_right_transposed(
    const OperatorMatrix& d) const {
  if (d.cols() != size())
    throw std::invalid_argument("apply_right_transposed: dimension mismatch");
  OperatorMatrix out(d.rows(), size());
  for (std::size_t y = 0; y < size(); ++y) {
    Rational diag = diagonal(y);
    if (diag != 0)
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (d.at(i, y) != 0) out.at(i, y) = d.at(i, y) * diag;
    for (const auto& [z, r] : rows_[y])
      for (std::size_t i = 0; i < d.rows(); ++i) {
        const Rational& v = d.at(i, z);
        if (v != 0) out.at(i, y) += v * r;
      }
  }
  return out;
}

std::string SparseGenerator::to_json() const {
  std::ostringstream os;
  os << "{\"states\":[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << "\"" << format_config(space_.config_of(i)) << "\"";
  }
  os << "],\"entries\":[";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, r] : rows_[i]) {
      if (!first) os << ",";
      first = false;
      os << "[" << i << "," << j << ",\"" << to_string(r) << "\"]";
    }
    Rational diag = diagonal(i);
    if (diag != 0) {
      if (!first) os << ",";
      first = false;
      os << "[" << i << "," << i << ",\"" << to_string(diag) << "\"]";
    }
  }
  os << "]}";
  return os.str();
}

ExchangeRates standard_exchange_rates(const Rational& q, const Rational& Q) {
  return ExchangeRates{q * q, Rational(1), Q * Q, Rational(1)};
}

OperatorMatrix exclusion_bond_table(int lo, int hi,
                                    const ExchangeRates& rates) {
  const std::size_t dim = static_cast<std::size_t>(hi - lo + 1);
  OperatorMatrix table(dim * dim, dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (a == b) continue;
      const Rational& rate = a > b ? rates.larger_right : rates.larger_left;
      table.at(a * dim + b, b * dim + a) = rate;
      table.at(a * dim + b, a * dim + b) = -rate;
    }
  return table;
}

OperatorMatrix boundary_flip_table(int r, const ExchangeRates& rates) {
  const std::size_t dim = 2 * static_cast<std::size_t>(r) + 1;
  OperatorMatrix table(dim, dim);
  for (int z = -r; z <= r; ++z) {
    if (z == 0) continue;
    const Rational& rate = z < 0 ? rates.flip_in : rates.flip_out;
    std::size_t from = static_cast<std::size_t>(z + r);
    std::size_t to = static_cast<std::size_t>(-z + r);
    table.at(from, to) = rate;
    table.at(from, from) = -rate;
  }
  return table;
}

OperatorMatrix braided_bond_table(long m, const Rational& q, bool from_fusion) {
  const std::size_t d = static_cast<std::size_t>(m) + 1;
  if (from_fusion) {
    return fused_bond_matrix(m, q, Fission::Deterministic) -
           OperatorMatrix::identity(d * d);
  }
  OperatorMatrix table(d * d, d * d);
  for (long k1 = 0; k1 <= m; ++k1)
    for (long k2 = 0; k2 <= m; ++k2) {
      Rational out(0);
      for (long l2 = 0; l2 <= m; ++l2) {
        long l1 = k1 + k2 - l2;
        if (l1 < 0 || l1 > m) continue;
        if (l1 == k1 && l2 == k2) continue;
        Rational rate = braided_rate(m, k1, k2, l2, q);
        if (rate == 0) continue;
        table.at(static_cast<std::size_t>(k1) * d + k2,
                 static_cast<std::size_t>(l1) * d + l2) = rate;
        out += rate;
      }
      table.at(static_cast<std::size_t>(k1) * d + k2,
               static_cast<std::size_t>(k1) * d + k2) = -out;
    }
  return table;
}

namespace {

// Sum a bond-local rule into the generator: local basis digits are the
// labels at the coupled positions, leftmost most significant.
void apply_local_rule(SparseGenerator& gen, const LocalRule& rule) {
  const StateSpace& space = gen.space();
  const std::size_t dim =
      static_cast<std::size_t>(space.label_max() - space.label_min() + 1);
  for (std::size_t i = 0; i < space.size(); ++i) {
    Config c = space.config_of(i);
    std::size_t local = 0;
    for (std::size_t k = 0; k < rule.span; ++k)
      local = local * dim + static_cast<std::size_t>(
                                c[rule.first_pos + k] - space.label_min());
    for (std::size_t target = 0; target < rule.table.cols(); ++target) {
      if (target == local) continue;
      const Rational& rate = rule.table.at(local, target);
      if (rate == 0) continue;
      Config t = c;
      std::size_t digits = target;
      for (std::size_t k = rule.span; k-- > 0;) {
        t[rule.first_pos + k] =
            static_cast<int>(digits % dim) + space.label_min();
        digits /= dim;
      }
      gen.add_rate(i, space.index_of(t), rate);
    }
  }
}

}  // namespace

SparseGenerator build_msasep(long L, int n, const Rational& q,
                             std::size_t cap) {
  if (L < 2) throw std::invalid_argument("build_msasep: L must be >= 2");
  if (n < 1) throw std::invalid_argument("build_msasep: n must be >= 1");
  SparseGenerator gen(enumerate_states(Model::MultiSpecies, L, n, cap));
  ExchangeRates rates = standard_exchange_rates(q, q);
  OperatorMatrix bond = exclusion_bond_table(0, n, rates);
  for (std::size_t p = 0; p + 1 < gen.space().sites(); ++p)
    apply_local_rule(gen, LocalRule{p, 2, bond});
  return gen;
}

SparseGenerator build_open(long L, int r, const Rational& q, const Rational& Q,
                           std::size_t cap) {
  if (L < 1) throw std::invalid_argument("build_open: L must be >= 1");
  if (r < 1) throw std::invalid_argument("build_open: r must be >= 1");
  SparseGenerator gen(enumerate_states(Model::Open, L, r, cap));
  ExchangeRates rates = standard_exchange_rates(q, Q);
  OperatorMatrix bond = exclusion_bond_table(-r, r, rates);
  for (std::size_t p = 0; p + 1 < gen.space().sites(); ++p)
    apply_local_rule(gen, LocalRule{p, 2, bond});
  apply_local_rule(gen, LocalRule{0, 1, boundary_flip_table(r, rates)});
  return gen;
}

Rational braided_rate_formula(long m, long k1, long k2, long l2,
                              const Rational& q) {
  if (l2 < 0 || l2 > k1) return Rational(0);
  Rational binom = q_binomial(k1, l2, q);
  Rational poch =
      q_pochhammer(rational_pow(q, 2 * (m - k2)), rational_pow(q, -2), k1 - l2);
  Rational mono = rational_pow(q, 2 * (m - k2 - k1 + l2) * l2);
  return binom * poch * mono;
}

Rational braided_rate(long m, long k1, long k2, long l2, const Rational& q) {
  if (m < 1) throw std::invalid_argument("braided_rate: m must be >= 1");
  if (k1 < 0 || k1 > m || k2 < 0 || k2 > m)
    throw std::invalid_argument("braided_rate: occupancy out of range");
  long l1 = k1 + k2 - l2;
  if (l2 < 0 || l2 > m || l1 < 0 || l1 > m) return Rational(0);
  return braided_rate_formula(m, k1, k2, l2, q);
}

SparseGenerator build_braided(long L, long m, const Rational& q,
                              BraidedSource source, std::size_t cap) {
  if (L < 2) throw std::invalid_argument("build_braided: L must be >= 2");
  if (m < 1) throw std::invalid_argument("build_braided: m must be >= 1");
  SparseGenerator gen(
      enumerate_states(Model::Braided, L, static_cast<int>(m), cap));
  OperatorMatrix bond =
      braided_bond_table(m, q, source == BraidedSource::FusionOracle);
  for (std::size_t p = 0; p + 1 < gen.space().sites(); ++p)
    apply_local_rule(gen, LocalRule{p, 2, bond});
  return gen;
}

}  // namespace mdl
