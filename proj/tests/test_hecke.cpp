#include <doctest.h>

#include "mdl/hecke.hpp"

using namespace mdl;

namespace {
const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);
}

TEST_CASE("type-A R-matrix relations") {
  for (int n : {1, 2}) {
    OperatorMatrix r = r_matrix_type_a(n, kHalf);
    // the matrix itself has eigenvalues {1, -1/q}; q.R carries the
    // normalized quadratic T^2 = (q-1)T + q
    CHECK(check_hecke_quadratic(r, 1 - Rational(2), Rational(2)));
    CHECK(check_hecke_quadratic(r.scaled(kHalf), kHalf - 1, kHalf));
    CHECK(check_braid_relation(r, static_cast<std::size_t>(n) + 1));
  }
  // equal labels are fixed
  OperatorMatrix r = r_matrix_type_a(1, kHalf);
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(3, 3) == 1);
}

TEST_CASE("distant embeddings commute") {
  OperatorMatrix r = r_matrix_type_a(1, kHalf);
  OperatorMatrix a = embed(r, 4, 0, 2, 2);
  OperatorMatrix b = embed(r, 4, 2, 2, 2);
  CHECK(a * b == b * a);
}

TEST_CASE("two-parameter R-matrix") {
  const Rational r = make_rational(2, 5), s = make_rational(3, 7);
  for (int n : {1, 2}) {
    OperatorMatrix t = r_matrix_two_param(n, r, s);
    // s.T carries the two-parameter quadratic T^2 = (s-r)T + rs
    CHECK(check_hecke_quadratic(t.scaled(s), s - r, r * s));
    CHECK(check_braid_relation(t, static_cast<std::size_t>(n) + 1));
  }
  // at (r, s) = (q, 1/q) it is q times the one-parameter bulk matrix
  OperatorMatrix two = r_matrix_two_param(2, kHalf, Rational(2));
  OperatorMatrix bulk = hecke_type_b_bulk(1, kHalf);  // same 3x3 local space
  CHECK(two == bulk.scaled(kHalf));
}

TEST_CASE("type-B generators") {
  for (int r : {1, 2}) {
    OperatorMatrix bulk = hecke_type_b_bulk(r, kHalf);
    OperatorMatrix boundary = hecke_type_b_boundary(r, kThird);
    CHECK(check_hecke_quadratic(bulk, Rational(2) - kHalf, Rational(1)));
    CHECK(check_hecke_quadratic(boundary, Rational(3) - kThird, Rational(1)));
    CHECK(check_braid_relation(bulk, 2 * static_cast<std::size_t>(r) + 1));
    CHECK(check_type_b_mixed(boundary, bulk, 2 * static_cast<std::size_t>(r) + 1));
    // the diagonally conjugated scaled moves are row-stochastic
    CHECK(stochastic_bulk_move(r, kHalf).is_row_stochastic());
    CHECK(stochastic_boundary_move(r, kThird).is_row_stochastic());
  }
}

TEST_CASE("stochastic moves drive the open generator bonds") {
  OperatorMatrix bulk = stochastic_bulk_move(1, kHalf);
  OperatorMatrix boundary = stochastic_boundary_move(1, kThird);
  Rational q2 = kHalf * kHalf, Q2 = kThird * kThird;
  // (k,l) with k > l swaps at q^2; smaller-first pairs swap at 1
  auto pair_index = [](int a, int b) {
    return static_cast<std::size_t>((a + 1) * 3 + (b + 1));
  };
  CHECK(bulk.at(pair_index(1, 0), pair_index(0, 1)) == q2);
  CHECK(bulk.at(pair_index(0, 1), pair_index(1, 0)) == 1);
  CHECK(bulk.at(pair_index(1, -1), pair_index(-1, 1)) == q2);
  CHECK(boundary.at(0, 2) == Q2);  // -1 -> 1
  CHECK(boundary.at(2, 0) == 1);   // 1 -> -1
  CHECK(boundary.at(1, 1) == 1);   // holes stay put
}

TEST_CASE("four-by-four single-bond move") {
  OperatorMatrix s = s_check(kHalf);
  CHECK(s.is_row_stochastic());
  CHECK(s.at(1, 1) == make_rational(3, 4));
  CHECK(s.at(1, 2) == make_rational(1, 4));
  CHECK(s.at(2, 1) == 1);
  // q = 1: the middle block is a plain swap
  OperatorMatrix s1 = s_check(Rational(1));
  CHECK(s1.at(1, 2) == 1);
  CHECK(s1.at(1, 1) == 0);
  CHECK(s1.at(2, 1) == 1);
  // site-ordered variant is the leg reflection
  CHECK(s_check_site(kHalf) == reflect_two_leg(s_check(kHalf), 2));
  CHECK(check_braid_relation(s_check(kHalf), 2));
  CHECK(check_braid_relation(s_check_site(kHalf), 2));
}

TEST_CASE("quadratic checker sanity") {
  OperatorMatrix id = OperatorMatrix::identity(3);
  CHECK(check_hecke_quadratic(id, Rational(1), Rational(0)));  // A^2 = A
  CHECK_FALSE(check_hecke_quadratic(id, Rational(2), Rational(0)));
}
