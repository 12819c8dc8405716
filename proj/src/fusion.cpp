#include "mdl/fusion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mdl/generators.hpp"
#include "mdl/hecke.hpp"

namespace mdl {

namespace {

constexpr long kMaxLegs = 20;

void check_m(long m) {
  if (m < 1) throw std::invalid_argument("fusion: m must be >= 1");
  if (2 * m > kMaxLegs)
    throw std::length_error("fusion: 2m exceeds the tensor leg cap");
}

std::size_t tensor_dim(long m) { return std::size_t{1} << (2 * m); }

// Tensor basis index is leg-1-major; leg l (1-based) of index v is the
// bit at shift 2m - l.
int leg_bit(std::size_t v, long m, long leg) {
  return static_cast<int>((v >> (2 * m - leg)) & 1u);
}

// occupancy pair index of a tensor basis vector
std::size_t fuse_index(std::size_t v, long m) {
  long a = 0, b = 0;
  for (long l = 1; l <= m; ++l) a += leg_bit(v, m, l);
  for (long l = m + 1; l <= 2 * m; ++l) b += leg_bit(v, m, l);
  return static_cast<std::size_t>(a) * (m + 1) + static_cast<std::size_t>(b);
}

using Wave = std::map<std::size_t, Rational>;

// One bond move applied to a sparse distribution over tensor indices.
Wave propagate(const Wave& in, long m, std::size_t bond,
               const OperatorMatrix& move) {
  Wave out;
  const int shift = static_cast<int>(2 * m - bond - 1);
  for (const auto& [v, p] : in) {
    std::size_t pair = (v >> shift) & 3u;
    for (std::size_t w = 0; w < 4; ++w) {
      const Rational& c = move.at(pair, w);
      if (c == 0) continue;
      std::size_t v2 = (v & ~(std::size_t{3} << shift)) | (w << shift);
      out[v2] += p * c;
    }
  }
  return out;
}

// subsets of {1..m} of size k, as leg masks within one block
void block_subsets(long m, long k, long start_leg, long chosen, long depth,
                   std::size_t mask, long total_m,
                   std::vector<std::pair<std::size_t, long>>& out) {
  // displacement accumulates (m - block position) per chosen leg
  if (chosen == k) {
    long disp = 0;
    for (long l = 1; l <= m; ++l)
      if (mask & (std::size_t{1} << (2 * total_m - (start_leg + l - 1))))
        disp += m - l;
    out.emplace_back(mask, disp);
    return;
  }
  if (depth > m) return;
  block_subsets(m, k, start_leg, chosen, depth + 1, mask, total_m, out);
  std::size_t bit = std::size_t{1} << (2 * total_m - (start_leg + depth - 1));
  block_subsets(m, k, start_leg, chosen + 1, depth + 1, mask | bit, total_m,
                out);
}

std::vector<std::pair<std::size_t, long>> block_placements(long m, long k,
                                                           long start_leg,
                                                           long total_m) {
  std::vector<std::pair<std::size_t, long>> out;
  block_subsets(m, k, start_leg, 0, 1, 0, total_m, out);
  return out;
}

Rational gaussian_binomial(long m, long k, const Rational& s) {
  Rational sum(0);
  for (const auto& [mask, disp] : block_placements(m, k, 1, m))
    sum += rational_pow(s, disp - k * (k - 1) / 2);
  return sum;
}

// distribution over one block's placements for k particles
std::vector<std::pair<std::size_t, Rational>> block_distribution(
    long m, long k, long start_leg, long total_m, Fission fission,
    const Rational& s) {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (fission == Fission::Deterministic) {
    std::size_t mask = 0;
    bool left_block = (start_leg == 1);
    for (long i = 0; i < k; ++i) {
      long leg = left_block ? start_leg + i : start_leg + m - 1 - i;
      mask |= std::size_t{1} << (2 * total_m - leg);
    }
    out.emplace_back(mask, Rational(1));
    return out;
  }
  Rational norm = gaussian_binomial(m, k, s);
  for (const auto& [mask, disp] : block_placements(m, k, start_leg, total_m))
    out.emplace_back(mask, rational_pow(s, disp - k * (k - 1) / 2) / norm);
  return out;
}

}  // namespace

std::vector<std::size_t> sigma_word(long m) {
  check_m(m);
  std::vector<std::size_t> word;
  word.reserve(static_cast<std::size_t>(m) * m);
  for (long t = 0; t < m; ++t)
    for (long i = m - t; i <= 2 * m - 1 - t; ++i)
      word.push_back(static_cast<std::size_t>(i));
  return word;
}

OperatorMatrix fission_map(long m, Fission fission, const Rational& s) {
  check_m(m);
  if (fission == Fission::Weighted && s <= 0)
    throw std::invalid_argument("fission_map: weight parameter must be > 0");
  const std::size_t occ = static_cast<std::size_t>(m + 1) * (m + 1);
  OperatorMatrix lam(occ, tensor_dim(m));
  for (long k1 = 0; k1 <= m; ++k1) {
    auto left = block_distribution(m, k1, 1, m, fission, s);
    for (long k2 = 0; k2 <= m; ++k2) {
      auto right = block_distribution(m, k2, m + 1, m, fission, s);
      std::size_t row = static_cast<std::size_t>(k1) * (m + 1) + k2;
      for (const auto& [ml, pl] : left)
        for (const auto& [mr, pr] : right) lam.at(row, ml | mr) += pl * pr;
    }
  }
  return lam;
}

OperatorMatrix fusion_map(long m) {
  check_m(m);
  const std::size_t occ = static_cast<std::size_t>(m + 1) * (m + 1);
  OperatorMatrix phi(tensor_dim(m), occ);
  for (std::size_t v = 0; v < tensor_dim(m); ++v)
    phi.at(v, fuse_index(v, m)) = 1;
  return phi;
}

OperatorMatrix sigma_word_product(long m, const OperatorMatrix& two_leg_move) {
  check_m(m);
  OperatorMatrix prod = OperatorMatrix::identity(tensor_dim(m));
  for (std::size_t bond : sigma_word(m))
    prod = prod * embed(two_leg_move, 2 * m, bond - 1, 2, 2);
  return prod;
}

OperatorMatrix fused_bond_matrix_for(long m, const OperatorMatrix& two_leg_move,
                                     Fission fission, const Rational& s) {
  check_m(m);
  const std::size_t occ = static_cast<std::size_t>(m + 1) * (m + 1);
  OperatorMatrix lam = fission_map(m, fission, s);
  OperatorMatrix sigma(occ, occ);
  const auto word = sigma_word(m);
  for (std::size_t row = 0; row < occ; ++row) {
    Wave wave;
    for (std::size_t v = 0; v < tensor_dim(m); ++v)
      if (lam.at(row, v) != 0) wave[v] = lam.at(row, v);
    for (std::size_t bond : word) wave = propagate(wave, m, bond, two_leg_move);
    for (const auto& [v, p] : wave) sigma.at(row, fuse_index(v, m)) += p;
  }
  return sigma;
}

OperatorMatrix fused_bond_matrix(long m, const Rational& q, Fission fission,
                                 const Rational& s) {
  return fused_bond_matrix_for(m, s_check_site(q), fission, s);
}

Rational fused_bond_probability(long m, long k1, long k2, long l2,
                                const Rational& q) {
  check_m(m);
  if (k1 < 0 || k1 > m || k2 < 0 || k2 > m || l2 < 0 || l2 > m)
    throw std::invalid_argument("fused_bond_probability: index out of range");
  long l1 = k1 + k2 - l2;
  if (l1 < 0 || l1 > m) return Rational(0);
  OperatorMatrix sigma = fused_bond_matrix(m, q, Fission::Deterministic);
  return sigma.at(static_cast<std::size_t>(k1) * (m + 1) + k2,
                  static_cast<std::size_t>(l1) * (m + 1) + l2);
}

namespace {

// Auxiliary chain in particle coordinates: the k1 left particles at
// positions p[0] < ... < p[k1-1] and the packed right block with left
// edge y1 (size k2, possibly 0 — then y1 is a virtual wall). Per sweep
// the particles attempt, left to right, a truncated-geometric
// rightward jump with parameter q^2; a particle that reaches the next
// one hands the attempt on, a shortfall shifts everything to its right
// (the right block included) one step left. `stays` counts sweeps in
// which the right block did not move.
struct AuxState {
  std::vector<long> p;
  long y1 = 0;
  long stays = 0;
  bool operator<(const AuxState& o) const {
    if (p != o.p) return p < o.p;
    if (y1 != o.y1) return y1 < o.y1;
    return stays < o.stays;
  }
};

using AuxDist = std::map<AuxState, Rational>;

void cascade(const AuxState& state, std::size_t i, const Rational& weight,
             const Rational& q2, AuxDist& out) {
  if (i == state.p.size()) {
    // every particle landed adjacent: the right block stays
    AuxState next = state;
    ++next.stays;
    out[next] += weight;
    return;
  }
  long next_pos = (i + 1 < state.p.size()) ? state.p[i + 1] : state.y1;
  long gap = next_pos - state.p[i] - 1;
  Rational reach = rational_pow(q2, gap);
  // maximum jump: lands adjacent, the next particle attempts
  {
    AuxState next = state;
    next.p[i] += gap;
    cascade(next, i + 1, weight * reach, q2, out);
  }
  // shortfall at g < gap: everything to the right shifts one left
  Rational geom(1);
  for (long g = 0; g < gap; ++g) {
    AuxState next = state;
    next.p[i] += g;
    for (std::size_t j = i + 1; j < next.p.size(); ++j) --next.p[j];
    --next.y1;
    out[next] += weight * geom * (Rational(1) - q2);
    geom *= q2;
  }
}

AuxDist aux_sweep(const AuxDist& in, const Rational& q2) {
  AuxDist out;
  for (const auto& [state, prob] : in) cascade(state, 0, prob, q2, out);
  return out;
}

AuxDist aux_run(long m, long k1, long k2, const Rational& q, long sweeps) {
  AuxState init;
  for (long i = 1; i <= k1; ++i) init.p.push_back(i);
  init.y1 = m - k2 + k1 + 1;
  AuxDist dist{{init, Rational(1)}};
  const Rational q2 = q * q;
  for (long t = 1; t <= sweeps; ++t) dist = aux_sweep(dist, q2);
  return dist;
}

long right_block_count(const AuxState& state, long m, long k2) {
  long n = 0;
  for (long pos : state.p)
    if (pos > m) ++n;
  long lo = std::max(state.y1, m + 1);
  long hi = state.y1 + k2 - 1;
  if (hi >= lo) n += hi - lo + 1;
  return n;
}

}  // namespace

std::vector<Rational> aux_process_distribution(long m, long k1, long k2,
                                               const Rational& q) {
  check_m(m);
  if (k1 < 0 || k1 > m || k2 < 0 || k2 > m)
    throw std::invalid_argument("aux_process_distribution: occupancies out of range");
  auto dist = aux_run(m, k1, k2, q, k1);
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational(0));
  for (const auto& [state, p] : dist) {
    long j = right_block_count(state, m, k2);
    if (j != state.stays)
      throw std::logic_error("aux chain: right-block count disagrees with the stay count");
    out[static_cast<std::size_t>(j)] += p;
  }
  return out;
}

RecurrenceReport check_rate_recurrence(long m, const Rational& q) {
  check_m(m);
  RecurrenceReport report;
  report.recurrence_ok = true;
  for (long k1 = 1; k1 <= m; ++k1)
    for (long k2 = 0; k2 <= m; ++k2)
      for (long l2 = 0; l2 <= k1; ++l2) {
        Rational lhs = braided_rate_formula(m, k1, k2, l2, q);
        Rational rhs =
            rational_pow(q, 2 * (m - k2 - k1 + l2)) *
                braided_rate_formula(m, k1 - 1, k2, l2 - 1, q) +
            (Rational(1) - rational_pow(q, 2 * (m - k2 - k1 + l2 + 1))) *
                braided_rate_formula(m, k1 - 1, k2, l2, q);
        if (lhs != rhs) report.recurrence_ok = false;
      }

  // Conditional step probabilities of the auxiliary chain: given l2-1
  // stays after k1-1 sweeps, the final sweep keeps the right block in
  // place with probability q^{2(m-k2-k1+l2)} (and moves it with the
  // complementary 1 - q^{2(m-k2-k1+(l2-1)+1)}).
  report.conditionals_ok = true;
  const Rational q2 = q * q;
  for (long k1 = 1; k1 <= m; ++k1)
    for (long k2 = 0; k2 <= m; ++k2) {
      auto before = aux_run(m, k1, k2, q, k1 - 1);
      std::map<long, Rational> marginal;   // stays after k1-1 sweeps
      std::map<long, Rational> stay_joint; // ... and a stay in sweep k1
      for (const auto& [state, p] : before) {
        marginal[state.stays] += p;
        auto after = aux_sweep({{state, p}}, q2);
        for (const auto& [state2, p2] : after)
          if (state2.stays == state.stays + 1) stay_joint[state.stays] += p2;
      }
      for (const auto& [stays, mass] : marginal) {
        if (mass == 0) continue;
        long l2 = stays + 1;  // a stay in the last sweep gives |S| = l2
        Rational cond = stay_joint.count(stays)
                            ? stay_joint.at(stays) / mass
                            : Rational(0);
        Rational expected = rational_pow(q, 2 * (m - k2 - k1 + l2));
        if (cond != expected) report.conditionals_ok = false;
      }
    }
  return report;
}

}  // namespace mdl
