#include <doctest.h>

#include "mdl/coideal.hpp"
#include "mdl/duality.hpp"
#include "mdl/verify.hpp"

using namespace mdl;

namespace {
const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);
}

TEST_CASE("a zero generator is dual to anything") {
  StateSpace sp = enumerate_states(Model::MultiSpecies, 2, 1);
  SparseGenerator zero(sp);
  QParams p{kHalf, {}, {}};
  OperatorMatrix d = duality_matrix(sp, p);
  DualityReport report = check_markov_duality(zero, d, "zero generator");
  CHECK(report.pass);
  CHECK(report.max_residual == "0");
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("failed checks expose the first witness") {
  StateSpace sp = enumerate_states(Model::MultiSpecies, 2, 1);
  SparseGenerator gen = build_msasep(2, 1, kHalf);
  OperatorMatrix bad = OperatorMatrix::identity(sp.size());
  bad.at(0, 1) = 7;  // breaks the identity
  DualityReport report = check_markov_duality(gen, bad, "broken");
  CHECK_FALSE(report.pass);
  CHECK(report.witness.has_value());
  CHECK(report.max_residual != "0");
}

TEST_CASE("detailed balance on a symmetric walk") {
  StateSpace sp = enumerate_states(Model::MultiSpecies, 2, 1);
  SparseGenerator gen(sp);
  gen.add_rate(0, 1, Rational(2));
  gen.add_rate(1, 0, Rational(2));
  std::vector<Rational> uniform(sp.size(), Rational(1));
  CHECK(check_detailed_balance(gen, uniform, "uniform").pass);
}

TEST_CASE("appendix fixtures are bit-exact") {
  for (const Rational& q : {kThird, kHalf}) {
    DualityReport report =
        check_appendix_fixtures(q, {kThird, kHalf});
    CHECK(report.pass);
  }
  CHECK_THROWS(check_appendix_fixtures(kHalf, {kThird}));
}

TEST_CASE("appendix transform gives the reversible measure") {
  for (const Rational& q : {kThird, kHalf}) {
    OperatorMatrix gen9 = appendix_fused_generator(q);
    std::vector<Rational> g = appendix_g_diagonal(q);
    // pi = G^{-2}: direct detailed balance on the dense matrix
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        CHECK(gen9.at(i, j) / (g[i] * g[i]) == gen9.at(j, i) / (g[j] * g[j]));
  }
}

TEST_CASE("braided generator is reversible for the reflected transform") {
  for (const Rational& q : {kThird, kHalf}) {
    SparseGenerator gen = build_braided(2, 2, q);
    std::vector<Rational> g = appendix_g_diagonal(q);
    std::vector<Rational> pi(9);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        const Rational& w = g[b * 3 + a];  // site reflection
        pi[a * 3 + b] = Rational(1) / (w * w);
      }
    CHECK(check_detailed_balance(gen, pi, "braided reversibility").pass);
  }
}

TEST_CASE("commutation check") {
  GroundFrame frame = build_ground_frame(2, kHalf, kThird);
  OperatorMatrix s = coproduct_f_half(2, kHalf, kThird);
  CHECK(check_commutation(frame.h, s, "symmetry").pass);
  OperatorMatrix id = OperatorMatrix::identity(frame.h.rows());
  CHECK(check_commutation(frame.h, id, "identity").pass);
}

TEST_CASE("report serialization") {
  DualityReport report;
  report.identity = "demo";
  report.params["q"] = "1/2";
  report.pass = true;
  report.seconds = 0.25;
  std::string j = report_to_json(report);
  CHECK(j.find("\"identity\":\"demo\"") != std::string::npos);
  CHECK(j.find("\"pass\":true") != std::string::npos);
  CHECK(j.find("\"max_residual\":\"0\"") != std::string::npos);
  CHECK(j.find("\"witness\":null") != std::string::npos);
}
