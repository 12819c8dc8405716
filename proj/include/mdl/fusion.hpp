#pragma once

#include <vector>

#include "mdl/matrix.hpp"
#include "mdl/qnum.hpp"

namespace mdl {

enum class Fission { Deterministic, Weighted };

/// Bond positions (1-based, legs i,i+1) of the m^2-term sigma word in
/// application order: update t = 0..m-1 applies bonds m-t .. 2m-1-t
/// ascending.
std::vector<std::size_t> sigma_word(long m);

/// Fission map Λ from occupancy pairs (k1,k2) in {0..m}^2 to the 2m-leg
/// tensor basis. Deterministic packs the k1 particles leftmost in legs
/// 1..m and the k2 particles rightmost in legs m+1..2m; Weighted(s)
/// distributes each block by s^displacement / gaussian binomial. Rows
/// are probability vectors and Λ·Φ = Id.
OperatorMatrix fission_map(long m, Fission fission,
                           const Rational& s = Rational(1));

/// Fusion map Φ: tensor basis vector -> its block occupancy pair.
OperatorMatrix fusion_map(long m);

/// Dense product of the embedded two-leg moves over the sigma word
/// (first word entry applied first).
OperatorMatrix sigma_word_product(long m, const OperatorMatrix& two_leg_move);

/// Λ · (sigma word product) · Φ on the (m+1)^2 occupancy-pair space for
/// an arbitrary two-leg move; row-stochastic when the move is.
OperatorMatrix fused_bond_matrix_for(long m, const OperatorMatrix& two_leg_move,
                                     Fission fission,
                                     const Rational& s = Rational(1));

/// The braided-ASEP bond transition matrix: fused_bond_matrix_for with
/// the site-ordered single-bond move s_check_site(q). Independent of the
/// fission choice. Caps at 2m <= 20 legs.
OperatorMatrix fused_bond_matrix(long m, const Rational& q, Fission fission,
                                 const Rational& s = Rational(1));

/// Entry ((k1,k2),(l1,l2)) of fused_bond_matrix with l1 = k1+k2-l2;
/// zero when the particle count is not conserved.
Rational fused_bond_probability(long m, long k1, long k2, long l2,
                                const Rational& q);

/// Distribution of the right-block particle count after the auxiliary
/// discrete-time chain: k1 particles at {1..k1}, k2 at
/// {m-k2+k1+1..m+k1}, k1 sweeps; per bond a (1,0) pair pushes right with
/// probability q^2 and a (0,1) pair pulls left. Returned vector is
/// indexed by l2 = 0..m.
std::vector<Rational> aux_process_distribution(long m, long k1, long k2,
                                               const Rational& q);

struct RecurrenceReport {
  bool recurrence_ok = false;     // closed-form three-term recurrence
  bool conditionals_ok = false;   // step conditionals of the aux chain
  bool ok() const { return recurrence_ok && conditionals_ok; }
};

/// Verifies, exactly, the rate recurrence
///   p(k1,k2;l2) = q^{2(m-k2-k1+l2)} p(k1-1,k2;l2-1)
///               + (1-q^{2(m-k2-k1+l2+1)}) p(k1-1,k2;l2)
/// for all index triples, and the auxiliary chain's one-step
/// conditional probabilities against the same q-powers.
RecurrenceReport check_rate_recurrence(long m, const Rational& q);

}  // namespace mdl
