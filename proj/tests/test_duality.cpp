#include <doctest.h>

#include <map>

#include "mdl/duality.hpp"
#include "mdl/generators.hpp"
#include "mdl/qnum.hpp"
#include "mdl/verify.hpp"

using namespace mdl;

namespace {
const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);
}

TEST_CASE("multi-species functional, basic values") {
  Rational q = kHalf;
  // empty dual configuration
  CHECK(duality_msasep({1, 0, 2}, {0, 0, 0}, 2, q) == 1);
  // indicator kills a smaller label
  CHECK(duality_msasep({1, 0, 0}, {2, 0, 0}, 2, q) == 0);
  // single dual particle at site x gives q^{-2x-2N}
  CHECK(duality_msasep({0, 1, 1}, {0, 1, 0}, 1, q) ==
        rational_pow(q, -4 - 2));
  CHECK(duality_msasep({0, 1, 0}, {0, 1, 0}, 1, q) == rational_pow(q, -4));
}

TEST_CASE("multi-species self-duality, exact") {
  for (long L : {2L, 3L, 4L}) {
    for (int n : {1, 2}) {
      SparseGenerator gen = build_msasep(L, n, kHalf);
      QParams p{kHalf, {}, {}};
      OperatorMatrix d = duality_matrix(gen.space(), p);
      CHECK(check_markov_duality(gen, d, "msasep").pass);
    }
  }
}

TEST_CASE("the ambiguous count argument is settled by the exact check") {
  SparseGenerator gen = build_msasep(4, 2, kHalf);
  OperatorMatrix d_eta(gen.size(), gen.size());
  OperatorMatrix d_xi(gen.size(), gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = 0; j < gen.size(); ++j) {
      Config eta = gen.space().config_of(i), xi = gen.space().config_of(j);
      d_eta.at(i, j) = duality_msasep(eta, xi, 2, kHalf, MschReading::EtaCounts);
      d_xi.at(i, j) = duality_msasep(eta, xi, 2, kHalf, MschReading::XiCounts);
    }
  CHECK(check_markov_duality(gen, d_eta, "eta reading").pass);
  CHECK_FALSE(check_markov_duality(gen, d_xi, "xi reading").pass);
}

TEST_CASE("left-count variant differs by a sector constant") {
  StateSpace sp = enumerate_states(Model::MultiSpecies, 4, 2);
  // sector key: species counts of eta and xi
  std::map<std::pair<std::vector<long>, std::vector<long>>, Rational> ratio;
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) {
      Config eta = sp.config_of(i), xi = sp.config_of(j);
      Rational right = duality_msasep(eta, xi, 2, kHalf);
      Rational left = duality_msasep_left(eta, xi, 2, kHalf);
      if (right == 0) {
        CHECK(left == 0);
        continue;
      }
      std::vector<long> ce(3, 0), cx(3, 0);
      for (int v : eta) ++ce[v];
      for (int v : xi) ++cx[v];
      auto key = std::make_pair(ce, cx);
      Rational r = left / right;
      auto [it, inserted] = ratio.emplace(key, r);
      if (!inserted) CHECK(it->second == r);
    }
}

TEST_CASE("open functional reproduces the worked entries") {
  Rational q = kHalf, Q = kThird;
  Config eta{-1, -1, 1, 1}, xi{1, -1, 0, 1}, eta_hat{1, -1, 1, 1},
      xi_hat{-1, -1, 0, 1};
  CHECK(duality_open({0, 0, 0, 0}, {0, 0, 0, 0}, q, Q) == 1);
  // D(eta_hat, xi) = Q^-2 q^-4 . Q^-2 q^-6 . q^2 . q^-6 . q^2 . q^2
  CHECK(duality_open(eta_hat, xi, q, Q) ==
        rational_pow(Q, -4) * rational_pow(q, -10));
  // L(eta, eta_hat) = Q^2, so the chain contribution is Q^-2 q^-10
  CHECK(kThird * kThird * duality_open(eta_hat, xi, q, Q) ==
        rational_pow(Q, -2) * rational_pow(q, -10));
  // D(eta, xi_hat) carries the boundary and bulk corrections
  CHECK(duality_open(eta, xi_hat, q, Q) ==
        rational_pow(Q, -2) * rational_pow(q, -10));
  CHECK(duality_open(eta, xi, q, Q) == 0);  // indicator: site 0 differs
}

TEST_CASE("open functional degenerations away from the boundary") {
  Rational q = kHalf, Q = kThird;
  StateSpace sp = enumerate_states(Model::Open, 3, 1);
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) {
      Config eta = sp.config_of(i), xi = sp.config_of(j);
      // no positive dual particles, nothing at the boundary: only the
      // minus-species product and the cross term survive
      if (!species_positions(xi, 1).empty()) continue;
      if (xi[0] == -1 || eta[0] == -1) continue;
      bool contained = true;
      for (std::size_t p = 0; p < xi.size(); ++p)
        if (xi[p] == -1 && eta[p] != -1) contained = false;
      Rational expected(0);
      if (contained) {
        long e = 0;
        for (std::size_t p = 0; p < xi.size(); ++p)
          if (xi[p] == -1) e += 2 * static_cast<long>(p) - 2 * left_count(eta, p, -1);
        long a1_eta = static_cast<long>(species_positions(eta, 1).size());
        long am1_xi = static_cast<long>(species_positions(xi, -1).size());
        expected = rational_pow(q, e - 2 * am1_xi * a1_eta);
      }
      CHECK(duality_open(eta, xi, q, Q) == expected);
    }
}

TEST_CASE("open self-duality, exact") {
  for (long L : {1L, 2L, 3L}) {
    SparseGenerator gen = build_open(L, 1, kHalf, kThird);
    QParams p{kHalf, kThird, {}};
    OperatorMatrix d = duality_matrix(gen.space(), p);
    CHECK(check_markov_duality(gen, d, "open").pass);
  }
}

TEST_CASE("braided functional values") {
  Rational q = kHalf;
  long m = 2;
  CHECK(duality_braided({2, 1}, {0, 0}, m, q) == 1);
  CHECK(duality_braided({1, 2}, {2, 0}, m, q) == 0);  // eta < xi somewhere
  // D(3 0, 2 0) = binom(3,2)/binom(m,2); occupancies above m extend
  for (long mm : {2L, 3L, 4L}) {
    CHECK(duality_braided({3, 0}, {2, 0}, mm, q) ==
          q_binomial(3, 2, q) / q_binomial(mm, 2, q));
  }
  // second-site factor carries position and left occupancy
  CHECK(duality_braided({2, 1}, {1, 1}, m, q) ==
        q_binomial(2, 1, q) / q_binomial(m, 1, q) / q_binomial(m, 1, q) *
            rational_pow(q, -2 * m + 2 * 2));
}

TEST_CASE("braided self-duality, exact") {
  for (long m : {1L, 2L, 3L}) {
    for (long L : {2L, 3L}) {
      SparseGenerator gen = build_braided(L, m, kHalf);
      QParams p{kHalf, {}, m};
      OperatorMatrix d = duality_matrix(gen.space(), p);
      CHECK(check_markov_duality(gen, d, "braided").pass);
    }
  }
}

TEST_CASE("the standard binomial convention is the one that works") {
  // negative control: the shifted convention breaks the identity
  long m = 2;
  SparseGenerator gen = build_braided(2, m, kHalf);
  OperatorMatrix d(gen.size(), gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = 0; j < gen.size(); ++j)
      d.at(i, j) =
          duality_braided(gen.space().config_of(i), gen.space().config_of(j),
                          m, kHalf, BinomialConvention::Symmetric);
  CHECK_FALSE(check_markov_duality(gen, d, "symmetric convention").pass);
}

TEST_CASE("braided m = 1 functional matches the single-species one per sector") {
  StateSpace sp = enumerate_states(Model::Braided, 3, 1);
  std::map<std::pair<long, long>, Rational> ratio;
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) {
      Config eta = sp.config_of(i), xi = sp.config_of(j);
      Rational braided = duality_braided(eta, xi, 1, kHalf);
      Rational msch = duality_msasep(eta, xi, 1, kHalf);
      if (msch == 0) {
        CHECK(braided == 0);
        continue;
      }
      long ne = 0, nx = 0;
      for (int v : eta) ne += v;
      for (int v : xi) nx += v;
      auto [it, inserted] = ratio.emplace(std::make_pair(ne, nx), braided / msch);
      if (!inserted) CHECK(it->second == braided / msch);
    }
}

TEST_CASE("symmetry route to the open duality matrix") {
  for (long L : {1L, 2L, 3L}) {
    OperatorMatrix from_symmetry = duality_open_from_symmetry(L, kHalf, kThird);
    StateSpace sp = enumerate_states(Model::Open, L, 1);
    QParams p{kHalf, kThird, {}};
    CHECK(from_symmetry == duality_matrix(sp, p));
    // vacuum row and column entry
    std::size_t b0 = sp.index_of(Config(L + 1, 0));
    CHECK(from_symmetry.at(b0, b0) == 1);
  }
  // second evaluation point
  StateSpace sp = enumerate_states(Model::Open, 2, 1);
  QParams p{make_rational(2, 3), make_rational(1, 5), {}};
  CHECK(duality_open_from_symmetry(2, p.q, *p.Q) == duality_matrix(sp, p));
}

TEST_CASE("indicator support of the symmetry route") {
  long L = 1;
  OperatorMatrix d = duality_open_from_symmetry(L, kHalf, kThird);
  StateSpace sp = enumerate_states(Model::Open, L, 1);
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) {
      Config eta = sp.config_of(i), xi = sp.config_of(j);
      bool contained = true;
      for (std::size_t p = 0; p < eta.size(); ++p)
        if (xi[p] != 0 && xi[p] != eta[p]) contained = false;
      if (!contained) CHECK(d.at(i, j) == 0);
      if (contained) CHECK(d.at(i, j) != 0);
    }
}

TEST_CASE("duality matrix argument validation") {
  StateSpace sp = enumerate_states(Model::Open, 1, 1);
  QParams no_big_q{kHalf, {}, {}};
  CHECK_THROWS(duality_matrix(sp, no_big_q));
  CHECK_THROWS(duality_msasep({1, 0}, {1, 0, 0}, 1, kHalf));
  CHECK_THROWS(duality_open({2, 0}, {1, 0}, kHalf, kThird));
}
