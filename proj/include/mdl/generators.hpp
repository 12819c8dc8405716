#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdl/matrix.hpp"
#include "mdl/states.hpp"

namespace mdl {

// Continuous-time Markov generator over a StateSpace. Off-diagonal
// rates are stored explicitly; the diagonal is implicitly minus the row
// sum, so every row sums to zero by construction.
class SparseGenerator {
 public:
  explicit SparseGenerator(StateSpace space)
      : space_(std::move(space)), rows_(space_.size()) {}

  const StateSpace& space() const { return space_; }
  std::size_t size() const { return rows_.size(); }

  void add_rate(std::size_t from, std::size_t to, const Rational& rate);
  Rational rate(std::size_t from, std::size_t to) const;
  Rational diagonal(std::size_t state) const;
  const std::map<std::size_t, Rational>& row(std::size_t state) const {
    return rows_[state];
  }

  OperatorMatrix to_dense() const;

  /// L * D for a dense D (diagonal included).
  OperatorMatrix apply_left(const OperatorMatrix& d) const;
  /// D * L^T for a dense D.
  OperatorMatrix apply_right_transposed(const OperatorMatrix& d) const;

  /// {"states": [...], "entries": [[i, j, "p/q"], ...]}
  std::string to_json() const;

 private:
  StateSpace space_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

// The whole exchange convention in one place: the larger label moves
// right at `larger_right`, left at `larger_left`; at the open boundary
// -k enters as k at `flip_in` and k leaves as -k at `flip_out`.
struct ExchangeRates {
  Rational larger_right;
  Rational larger_left;
  Rational flip_in;
  Rational flip_out;
};

/// The convention used by every builder: {q^2, 1, Q^2, 1}.
ExchangeRates standard_exchange_rates(const Rational& q, const Rational& Q);

// A bond-local rule: the positions it couples and its rate table over
// the local basis (rows sum to zero).
struct LocalRule {
  std::size_t first_pos;   // leftmost coupled position
  std::size_t span;        // 1 for the boundary, 2 for a bond
  OperatorMatrix table;
};

/// Two-site exchange generator over labels lo..hi under `rates`.
OperatorMatrix exclusion_bond_table(int lo, int hi, const ExchangeRates& rates);

/// One-site boundary-flip generator over labels -r..r under `rates`.
OperatorMatrix boundary_flip_table(int r, const ExchangeRates& rates);

/// The braided bond generator on occupancy pairs (fused transition
/// matrix minus identity, or the closed-form rates).
OperatorMatrix braided_bond_table(long m, const Rational& q, bool from_fusion);

/// Closed-boundary multi-species ASEP on sites 1..L, labels 0..n
/// (0 = hole). Adjacent labels k > l: (k,l) -> (l,k) at rate q^2,
/// (l,k) -> (k,l) at rate 1.
SparseGenerator build_msasep(long L, int n, const Rational& q,
                             std::size_t cap = kDefaultStateCap);

/// Open multi-species ASEP on sites 0..L, labels -r..r. Bulk bonds as in
/// build_msasep under the integer label order; at site 0 a label -k
/// flips to k at rate Q^2 and k to -k at rate 1 (k > 0), holes fixed.
SparseGenerator build_open(long L, int r, const Rational& q, const Rational& Q,
                           std::size_t cap = kDefaultStateCap);

/// The bond rate formula for braided ASEP, evaluated with no range
/// checks on the occupancies:
///   binom(k1, l2)_{q^2} (q^{2(m-k2)}; q^{-2})_{k1-l2} q^{2(m-k2-k1+l2) l2}
/// where k1, k2 are the occupancies left/right of the bond before the
/// jump and l2 = k1 + k2 - l1 after. Zero when l2 < 0 or l2 > k1.
Rational braided_rate_formula(long m, long k1, long k2, long l2,
                              const Rational& q);

/// Same rate with the state-space range checks (0 <= k1,k2,l2 <= m and
/// l1 = k1+k2-l2 in [0,m]); out-of-range targets get rate 0.
Rational braided_rate(long m, long k1, long k2, long l2, const Rational& q);

enum class BraidedSource { ClosedForm, FusionOracle };

/// Braided ASEP generator on sites 1..L, occupancies 0..m. The bond
/// rates come either from braided_rate or from the fused bond matrix
/// minus identity; the two agree entrywise.
SparseGenerator build_braided(long L, long m, const Rational& q,
                              BraidedSource source = BraidedSource::ClosedForm,
                              std::size_t cap = kDefaultStateCap);

}  // namespace mdl
