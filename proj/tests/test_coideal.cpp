#include <doctest.h>

#include "mdl/coideal.hpp"
#include "mdl/generators.hpp"
#include "mdl/verify.hpp"

using namespace mdl;

namespace {

const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);

// composition in operator order: lin(A, B) applies B first, then A
OperatorMatrix lin(const OperatorMatrix& a, const OperatorMatrix& b) {
  return b * a;
}

long particle_count(const Config& c) {
  long d = 0;
  for (int v : c)
    if (v != 0) ++d;
  return d;
}

}  // namespace

TEST_CASE("a-operator commutation relations") {
  const Rational q2 = kHalf * kHalf;
  for (long L : {1L, 2L, 3L}) {
    AOperators a = build_a_operators(L, kHalf, kThird);
    for (long l = 1; l <= L; ++l)
      for (long j = l + 1; j <= L; ++j) {
        CHECK(lin(a.a_plus[j], a.a_plus[l]) ==
              lin(a.a_plus[l], a.a_plus[j]).scaled(q2));
        CHECK(lin(a.a_minus[l], a.a_minus[j]) ==
              lin(a.a_minus[j], a.a_minus[l]).scaled(q2));
        CHECK(lin(a.a_plus[l], a.a_minus[j]) ==
              lin(a.a_minus[j], a.a_plus[l]).scaled(q2));
        CHECK(lin(a.a_plus[j], a.a_minus[l]) ==
              lin(a.a_minus[l], a.a_plus[j]).scaled(q2));
      }
    for (long j = 1; j <= L; ++j) {
      CHECK(lin(a.a_plus[j], a.a0) == lin(a.a0, a.a_plus[j]).scaled(q2));
      CHECK(lin(a.a0, a.a_minus[j]) == lin(a.a_minus[j], a.a0).scaled(q2));
    }
  }
}

TEST_CASE("a-operators are nilpotent") {
  AOperators a = build_a_operators(2, kHalf, kThird);
  CHECK((a.a0 * a.a0).is_zero());
  for (long j = 1; j <= 2; ++j) {
    CHECK((a.a_plus[j] * a.a_plus[j]).is_zero());
    CHECK((a.a_minus[j] * a.a_minus[j]).is_zero());
  }
}

TEST_CASE("coproduct recursion") {
  LocalQOperators ops = local_q_operators(kHalf, kThird);
  for (long L : {2L, 3L}) {
    OperatorMatrix big = coproduct_f_half(L, kHalf, kThird);
    OperatorMatrix small = coproduct_f_half(L - 1, kHalf, kThird);
    std::size_t dim = 1;
    for (long i = 0; i < L; ++i) dim *= 3;
    OperatorMatrix k_tail = ops.k_half;
    for (long i = 1; i < L; ++i) k_tail = kron(k_tail, ops.k_half);
    OperatorMatrix expected = kron(small, ops.k_minus_inv) +
                              kron(OperatorMatrix::identity(dim), ops.e_lower) +
                              kron(k_tail, ops.kinv_f).scaled(kThird);
    CHECK(big == expected);
  }
}

TEST_CASE("ground transform closed formula") {
  long L = 3;
  GroundFrame frame = build_ground_frame(L, kHalf, kThird);
  const StateSpace& sp = frame.space;
  CHECK(frame.lambda == 4);
  // vacuum entry
  CHECK(frame.g[sp.index_of({0, 0, 0, 0})] == 1);
  // one positive particle at site x and nothing else: Q q^{L+x}
  for (long x = 1; x <= L; ++x) {
    Config c(L + 1, 0);
    c[static_cast<std::size_t>(x)] = 1;
    CHECK(frame.g[sp.index_of(c)] == kThird * rational_pow(kHalf, L + x));
  }
  // the site-product form agrees everywhere
  for (std::size_t i = 0; i < sp.size(); ++i)
    CHECK(frame.g[i] == ground_g_site_form(sp.config_of(i), L, kHalf, kThird));
}

TEST_CASE("H is self-adjoint and commutes with the symmetry") {
  for (long L : {1L, 2L}) {
    GroundFrame frame = build_ground_frame(L, kHalf, kThird);
    CHECK(frame.h == frame.h.transposed());
    CHECK(check_symmetry_commutation(L, kHalf, kThird));
    OperatorMatrix id = OperatorMatrix::identity(frame.h.rows());
    CHECK(commutator(frame.h, id).is_zero());
  }
}

TEST_CASE("conjugated frame reproduces the open generator") {
  for (long L : {1L, 2L, 3L}) {
    GroundFrame frame = build_ground_frame(L, kHalf, kThird);
    SparseGenerator gen = build_open(L, 1, kHalf, kThird);
    for (std::size_t i = 0; i < frame.space.size(); ++i)
      for (std::size_t j = 0; j < frame.space.size(); ++j) {
        Rational h = frame.h.at(i, j);
        if (i == j) h -= frame.lambda;
        CHECK(h * frame.g[j] / frame.g[i] == gen.rate(i, j));
      }
  }
}

TEST_CASE("every state appears at a unique symmetry power") {
  long L = 2;
  GroundFrame frame = build_ground_frame(L, kHalf, kThird);
  const std::size_t b0 = frame.space.index_of(Config(L + 1, 0));
  std::vector<long> seen(frame.space.size(), -1);
  for (long d = 0; d <= 2 * (L + 1); ++d) {
    OperatorMatrix p = expand_symmetry_power(L, d, kHalf, kThird);
    for (std::size_t b = 0; b < frame.space.size(); ++b)
      if (p.at(b0, b) != 0) {
        CHECK(seen[b] == -1);
        seen[b] = d;
      }
  }
  for (std::size_t b = 0; b < frame.space.size(); ++b) {
    CHECK(seen[b] == particle_count(frame.space.config_of(b)));
  }
}

TEST_CASE("ordered-word expansion of the symmetry powers") {
  long L = 2;
  StateSpace sp(Model::Open, L, 1);
  const std::size_t b0 = sp.index_of(Config(L + 1, 0));
  for (long d = 0; d <= 2 * (L + 1); ++d) {
    OperatorMatrix p = expand_symmetry_power(L, d, kHalf, kThird);
    if (d > L + 1) {
      CHECK(p.is_zero());
      continue;
    }
    for (std::size_t b = 0; b < sp.size(); ++b) {
      Config c = sp.config_of(b);
      if (particle_count(c) != d) continue;
      // normalized power equals the canonical word up to q^{-d(d-1)}
      CHECK(p.at(b0, b) == rational_pow(kHalf, -d * (d - 1)) *
                               ground_g_from_word(c, L, kHalf, kThird));
    }
  }
  CHECK(expand_symmetry_power(L, 0, kHalf, kThird) ==
        OperatorMatrix::identity(sp.size()));
}

TEST_CASE("squared transform is reversible and invariant") {
  for (long L : {1L, 2L, 3L}) {
    std::vector<Rational> pi = reversible_measure_open(L, kHalf, kThird);
    SparseGenerator gen = build_open(L, 1, kHalf, kThird);
    DualityReport report = check_detailed_balance(gen, pi, "open reversibility");
    CHECK(report.pass);
    // invariance: pi^T L = 0
    for (std::size_t j = 0; j < gen.size(); ++j) {
      Rational col(0);
      for (std::size_t i = 0; i < gen.size(); ++i) col += pi[i] * gen.rate(i, j);
      CHECK(col == 0);
    }
    CHECK(pi[gen.space().index_of(Config(L + 1, 0))] == 1);
  }
}
