#pragma once

#include "mdl/matrix.hpp"

namespace mdl {

/// Type-A Hecke R-matrix on C^{n+1} ⊗ C^{n+1} (indices 0..n):
///   Σ_{i<j} E_{j,i}⊗E_{i,j} + q^{-1} Σ_{i<j} E_{i,j}⊗E_{j,i}
///   + (1 - q^{-1}) Σ_{i<j} E_{j,j}⊗E_{i,i} + Σ_i E_{i,i}⊗E_{i,i}.
OperatorMatrix r_matrix_type_a(int n, const Rational& q);

/// Two-parameter variant:
///   r Σ_{i<j} E_{j,i}⊗E_{i,j} + s^{-1} Σ_{i<j} E_{i,j}⊗E_{j,i}
///   + (1 - r s^{-1}) Σ_{i<j} E_{j,j}⊗E_{i,i} + Σ_i E_{i,i}⊗E_{i,i},
/// satisfying T^2 = (s - r)T + rs.
OperatorMatrix r_matrix_two_param(int n, const Rational& r, const Rational& s);

/// Type-B bulk generator matrix on C^{2r+1} ⊗ C^{2r+1}, indices -r..r:
///   q^{-1} Σ_i E_{i,i}⊗E_{i,i} + Σ_{i<j} E_{j,i}⊗E_{i,j}
///   + (q^{-1} - q) Σ_{i<j} E_{j,j}⊗E_{i,i} + Σ_{i<j} E_{i,j}⊗E_{j,i}.
OperatorMatrix hecke_type_b_bulk(int r_species, const Rational& q);

/// Type-B boundary generator matrix on C^{2r+1}:
///   Q^{-1} E_{0,0} + Σ_{i>0} E_{-i,i} + (Q^{-1} - Q) Σ_{i<0} E_{i,i}
///   + Σ_{i<0} E_{-i,i}.
OperatorMatrix hecke_type_b_boundary(int r_species, const Rational& Q);

/// Row-stochastic bulk move: q * hecke_type_b_bulk conjugated by the
/// inversion-counting diagonal. The exchange (k,l) -> (l,k) runs at
/// probability q^2 for k > l and 1 for k < l.
OperatorMatrix stochastic_bulk_move(int r_species, const Rational& q);

/// Row-stochastic boundary move: Q * hecke_type_b_boundary conjugated
/// likewise; -k flips to k with probability Q^2 and k to -k surely.
OperatorMatrix stochastic_boundary_move(int r_species, const Rational& Q);

/// The 4x4 stochastic matrix on R^2 ⊗ R^2
///   [[1,0,0,0],[0,1-q^2,q^2,0],[0,1,0,0],[0,0,0,1]].
OperatorMatrix s_check(const Rational& q);

/// Site-ordered variant of s_check (legs swapped): the single-bond move
/// of the left-drifting braided dynamics.
OperatorMatrix s_check_site(const Rational& q);

/// A(i,i+1) A(i+1,i+2) A(i,i+1) == A(i+1,i+2) A(i,i+1) A(i+1,i+2) on
/// three legs of dimension dim, for a two-leg operator A.
bool check_braid_relation(const OperatorMatrix& local, std::size_t dim);

/// A^2 == a A + b Id.
bool check_hecke_quadratic(const OperatorMatrix& a_matrix, const Rational& a,
                           const Rational& b);

/// T0 T1 T0 T1 == T1 T0 T1 T0 with T0 one-leg and T1 two-leg on
/// (C^dim)^{⊗2}.
bool check_type_b_mixed(const OperatorMatrix& t0, const OperatorMatrix& t1,
                        std::size_t dim);

}  // namespace mdl
