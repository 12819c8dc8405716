#pragma once

#include <vector>

#include "mdl/matrix.hpp"
#include "mdl/qnum.hpp"
#include "mdl/states.hpp"

namespace mdl {

// Local operators on C^3 with ordered basis (u_{-1}, u_0, u_1), stored
// row = source. E lowers u_0 to u_{-1}, F raises u_0 to u_1; the K's are
// diagonal with the weights that make every a-operator commutation
// below hold exactly.
struct LocalQOperators {
  OperatorMatrix e_lower;     // E_{-1/2}
  OperatorMatrix f_raise;     // F_{1/2}
  OperatorMatrix k_plus;      // K_{1/2}
  OperatorMatrix k_minus;     // K_{-1/2}
  OperatorMatrix k_minus_inv; // K_{-1/2}^{-1}
  OperatorMatrix k_half;      // K_{1/2} K_{-1/2}^{-1}
  OperatorMatrix kinv_f;      // K_{-1/2}^{-1} F_{1/2} (F applied first)
  OperatorMatrix f_half;      // E_{-1/2} + Q K_{-1/2}^{-1} F_{1/2}
};

LocalQOperators local_q_operators(const Rational& q, const Rational& Q);

struct AOperators {
  OperatorMatrix a0;
  std::vector<OperatorMatrix> a_plus;   // index 1..L (entry 0 unused)
  std::vector<OperatorMatrix> a_minus;  // index 1..L (entry 0 unused)
};

/// The 3^{L+1}-dimensional raising pieces:
///   a0       = f ⊗ (K^{-1})^{⊗L},
///   a_j^+    = 1^{⊗j} ⊗ E ⊗ (K^{-1})^{⊗(L-j)},
///   a_j^-    = Q k^{⊗j} ⊗ K^{-1}F ⊗ (K^{-1})^{⊗(L-j)}.
AOperators build_a_operators(long L, const Rational& q, const Rational& Q,
                             std::size_t cap = kDefaultStateCap);

/// Δ^{(L)}(f_{1/2}) = a0 + Σ_y a_y^+ + Σ_x a_x^-.
OperatorMatrix coproduct_f_half(long L, const Rational& q, const Rational& Q);

struct GroundFrame {
  StateSpace space;        // open model, r = 1, sites 0..L
  OperatorMatrix h;        // Q T_0 + q Σ_x T_x, self-adjoint
  Rational lambda;         // eigenvalue of the vacuum row, = L + 1
  std::vector<Rational> g; // diagonal ground-state transform
};

/// Assembles H, checks the vacuum eigen-relation, and computes G two
/// ways (ordered-word coefficients and the closed product formula),
/// failing loudly if anything disagrees.
GroundFrame build_ground_frame(long L, const Rational& q, const Rational& Q,
                               std::size_t cap = kDefaultStateCap);

/// Closed product formula for the ground-state transform of one state.
Rational ground_g_formula(const Config& open_config, long L, const Rational& q,
                          const Rational& Q);

/// Alternative site-product form of the same quantity (origin particles
/// included as position 0).
Rational ground_g_site_form(const Config& open_config, long L,
                            const Rational& q, const Rational& Q);

/// Coefficient of the state in the canonical ordered word applied to
/// the vacuum: a^-'s from the largest site down, then a0, then a^+'s
/// ascending. Equals ground_g_formula.
Rational ground_g_from_word(const Config& open_config, long L,
                            const Rational& q, const Rational& Q);

/// [H, Δ^{(L)}(f_{1/2})] == 0, exactly.
bool check_symmetry_commutation(long L, const Rational& q, const Rational& Q);

/// ([d]_{q^2}!)^{-1} Δ^{(L)}(f_{1/2})^d.
OperatorMatrix expand_symmetry_power(long L, long d, const Rational& q,
                                     const Rational& Q);

/// π(b) = G(b,b)^2, the reversible measure of the open process.
std::vector<Rational> reversible_measure_open(long L, const Rational& q,
                                              const Rational& Q);

}  // namespace mdl
