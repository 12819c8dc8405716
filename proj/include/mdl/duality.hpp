#pragma once

#include "mdl/matrix.hpp"
#include "mdl/qnum.hpp"
#include "mdl/states.hpp"

namespace mdl {

enum class MschReading { EtaCounts, XiCounts };

/// Multi-species self-duality functional
///   D(eta, xi) = ∏_{k>=1} ∏_{x in A_k(xi)} 1{eta(x) >= xi(x)}
///                q^{-2x - 2 Σ_{j=k..n} N_x^j},
/// sites counted 1..L, arrows-to-the-right counts taken in eta
/// (EtaCounts; the XiCounts reading is exposed only so the failing
/// alternative can be demonstrated).
Rational duality_msasep(const Config& eta, const Config& xi, int n,
                        const Rational& q,
                        MschReading reading = MschReading::EtaCounts);

/// Left-count variant (q^{-2x + 2 Σ left-counts}): equals duality_msasep
/// up to a constant on each fixed-species-content sector.
Rational duality_msasep_left(const Config& eta, const Config& xi, int n,
                             const Rational& q);

/// Open-model (r = 1) self-duality functional on sites 0..L:
///   1{A_1(xi) ⊆ A_1(eta), A_-1(xi) ⊆ A_-1(eta)}
///   ∏_{x in A_1(xi)} Q^{-2} q^{-2x - 2 rightN_x^1(eta)}
///   ∏_{y in A_-1(xi)} q^{2y - 2 leftN_y^{-1}(eta)}
///   q^{-2 |A_-1(xi)| |A_1(eta)|} q^{|A_1(xi)|(|A_1(xi)|-1)}
///   ∏_{y in A_-1(xi)} q^{2 rightN_y^1(xi)}.
Rational duality_open(const Config& eta, const Config& xi, const Rational& q,
                      const Rational& Q);

/// Braided self-duality functional, positions counted from 0:
///   ∏_x binom(eta_x, xi_x)_{q^2} / binom(m, xi_x)_{q^2}
///       q^{xi_x (-2m(x-1) + 2 leftOcc_x(eta))}.
/// Occupancies above m are allowed (the formula extends).
Rational duality_braided(const Config& eta, const Config& xi, long m,
                         const Rational& q,
                         BinomialConvention convention = BinomialConvention::Standard);

/// Dense duality matrix D(eta, xi) over a state space, one of the three
/// functionals chosen by the space's model.
OperatorMatrix duality_matrix(const StateSpace& space, const QParams& params);

/// The open duality matrix assembled from the symmetry apparatus:
/// column scale q^{2L d(xi) - d(xi)(d(xi)-1)} times
/// G^{-1} (Σ_d ([d]_{q^{-2}}!)^{-1} S^d) G^{-1} with S the L-fold
/// coproduct of the raising element and G the ground-state transform.
/// Equals duality_matrix of the open model entrywise.
OperatorMatrix duality_open_from_symmetry(long L, const Rational& q,
                                          const Rational& Q);

}  // namespace mdl
