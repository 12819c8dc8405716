#include "mdl/verify.hpp"

#include <chrono>

#include <json.hpp>

#include "mdl/fusion.hpp"
#include "mdl/hecke.hpp"

namespace mdl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish(DualityReport& report, const OperatorMatrix& residual,
            Clock::time_point start) {
  report.pass = residual.is_zero();
  report.max_residual = to_string(residual.max_abs());
  report.witness = residual.first_nonzero();
  report.seconds = elapsed(start);
}

// Hard-coded fixture matrices.

OperatorMatrix appendix_s_check(const Rational& q) {
  const Rational q2 = q * q;
  OperatorMatrix s(4, 4);
  s.at(0, 0) = 1;
  s.at(1, 1) = Rational(1) - q2;
  s.at(1, 2) = q2;
  s.at(2, 1) = 1;
  s.at(3, 3) = 1;
  return s;
}

OperatorMatrix appendix_fused_16(const Rational& q) {
  auto qp = [&](long e) { return rational_pow(q, e); };
  OperatorMatrix m(16, 16);
  m.at(1, 1) = -qp(2);
  m.at(1, 2) = qp(2) - qp(4);
  m.at(1, 4) = qp(4);
  m.at(2, 1) = Rational(1) - qp(2);
  m.at(2, 2) = -qp(4) + qp(2) - 1;
  m.at(2, 8) = qp(4);
  m.at(3, 3) = qp(2) * (qp(4) - qp(2) - 1);
  m.at(3, 5) = qp(2) - qp(4);
  m.at(3, 6) = qp(4) - qp(6);
  m.at(3, 9) = qp(4) - qp(6);
  m.at(3, 10) = qp(6) - qp(8);
  m.at(3, 12) = qp(8);
  m.at(4, 1) = 1;
  m.at(4, 4) = -1;
  m.at(5, 3) = Rational(1) - qp(2);
  m.at(5, 5) = qp(2) - 1;
  m.at(6, 3) = Rational(1) - qp(2);
  m.at(6, 6) = -1;
  m.at(6, 9) = qp(2);
  m.at(7, 7) = -qp(2);
  m.at(7, 11) = qp(2) - qp(4);
  m.at(7, 13) = qp(4);
  m.at(8, 2) = 1;
  m.at(8, 8) = -1;
  m.at(9, 3) = Rational(1) - qp(2);
  m.at(9, 6) = qp(2);
  m.at(9, 9) = -1;
  m.at(10, 3) = Rational(1) - qp(2);
  m.at(10, 10) = qp(2) - 1;
  m.at(11, 7) = Rational(1) - qp(2);
  m.at(11, 11) = -qp(4) + qp(2) - 1;
  m.at(11, 14) = qp(4);
  m.at(12, 3) = 1;
  m.at(12, 12) = -1;
  m.at(13, 7) = 1;
  m.at(13, 13) = -1;
  m.at(14, 11) = 1;
  m.at(14, 14) = -1;
  return m;
}

OperatorMatrix appendix_lambda(const Rational& s) {
  const Rational u = Rational(1) / (s + 1);
  const Rational su = s * u;
  OperatorMatrix lam(9, 16);
  lam.at(0, 0) = 1;
  lam.at(1, 1) = u;
  lam.at(1, 2) = su;
  lam.at(2, 3) = 1;
  lam.at(3, 4) = u;
  lam.at(3, 8) = su;
  lam.at(4, 5) = u * u;
  lam.at(4, 6) = su * u;
  lam.at(4, 9) = su * u;
  lam.at(4, 10) = su * su;
  lam.at(5, 7) = u;
  lam.at(5, 11) = su;
  lam.at(6, 12) = 1;
  lam.at(7, 13) = u;
  lam.at(7, 14) = su;
  lam.at(8, 15) = 1;
  return lam;
}

OperatorMatrix appendix_phi() {
  OperatorMatrix phi(16, 9);
  const std::size_t col[16] = {0, 1, 1, 2, 3, 4, 4, 5, 3, 4, 4, 5, 6, 7, 7, 8};
  for (std::size_t v = 0; v < 16; ++v) phi.at(v, col[v]) = 1;
  return phi;
}

OperatorMatrix appendix_fused_9(const Rational& q) {
  auto qp = [&](long e) { return rational_pow(q, e); };
  OperatorMatrix m(9, 9);
  m.at(1, 1) = -qp(4);
  m.at(1, 3) = qp(4);
  m.at(2, 2) = qp(2) * (qp(4) - qp(2) - 1);
  m.at(2, 4) = (Rational(1) - qp(2)) * (qp(3) + q) * (qp(3) + q);
  m.at(2, 6) = qp(8);
  m.at(3, 1) = 1;
  m.at(3, 3) = -1;
  m.at(4, 2) = Rational(1) - qp(2);
  m.at(4, 4) = qp(2) - 1;
  m.at(5, 5) = -qp(4);
  m.at(5, 7) = qp(4);
  m.at(6, 2) = 1;
  m.at(6, 6) = -1;
  m.at(7, 5) = 1;
  m.at(7, 7) = -1;
  return m;
}

// occupancy-pair reflection (a,b) -> (b,a) on a (m+1)^2 space
OperatorMatrix reflect_occupancy(const OperatorMatrix& m, std::size_t d) {
  OperatorMatrix out(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e)
          out.at(b * d + a, e * d + c) = m.at(a * d + b, c * d + e);
  return out;
}

}  // namespace

std::string report_to_json(const DualityReport& report) {
  nlohmann::json j;
  j["identity"] = report.identity;
  j["params"] = report.params;
  j["pass"] = report.pass;
  j["max_residual"] = report.max_residual;
  if (report.witness)
    j["witness"] = {report.witness->first, report.witness->second};
  else
    j["witness"] = nullptr;
  j["seconds"] = report.seconds;
  return j.dump();
}

DualityReport check_markov_duality(const SparseGenerator& gen,
                                   const OperatorMatrix& d,
                                   const std::string& identity,
                                   std::map<std::string, std::string> params) {
  auto start = Clock::now();
  DualityReport report{identity, std::move(params)};
  if (d.rows() != gen.size() || d.cols() != gen.size())
    throw std::invalid_argument("check_markov_duality: dimension mismatch");
  OperatorMatrix residual =
      gen.apply_left(d) - gen.apply_right_transposed(d);
  finish(report, residual, start);
  return report;
}

DualityReport check_detailed_balance(const SparseGenerator& gen,
                                     const std::vector<Rational>& pi,
                                     const std::string& identity,
                                     std::map<std::string, std::string> params) {
  auto start = Clock::now();
  DualityReport report{identity, std::move(params)};
  if (pi.size() != gen.size())
    throw std::invalid_argument("check_detailed_balance: dimension mismatch");
  OperatorMatrix residual(gen.size(), gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (const auto& [j, r] : gen.row(i))
      residual.at(i, j) = pi[i] * r - pi[j] * gen.rate(j, i);
  finish(report, residual, start);
  return report;
}

DualityReport check_commutation(const OperatorMatrix& a,
                                const OperatorMatrix& b,
                                const std::string& identity,
                                std::map<std::string, std::string> params) {
  auto start = Clock::now();
  DualityReport report{identity, std::move(params)};
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("check_commutation: dimension mismatch");
  finish(report, commutator(a, b), start);
  return report;
}

OperatorMatrix appendix_fused_generator(const Rational& q) {
  return appendix_fused_9(q);
}

std::vector<Rational> appendix_g_diagonal(const Rational& q) {
  const Rational one(1);
  return {one,
          one,
          one,
          rational_pow(q, -2),
          rational_pow(q, -1) / (one + q * q),
          one,
          rational_pow(q, -4),
          rational_pow(q, -2),
          one};
}

DualityReport check_appendix_fixtures(const Rational& q,
                                      const std::vector<Rational>& s_values) {
  auto start = Clock::now();
  DualityReport report{"appendix_fixtures", {{"q", to_string(q)}}};
  if (s_values.size() < 2)
    throw std::invalid_argument("check_appendix_fixtures: need >= 2 s values");

  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  const OperatorMatrix s4 = appendix_s_check(q);
  expect(s_check(q) == s4, "4x4 single-bond move");

  // fixture word order: legs (2,3),(1,2),(3,4),(2,3)
  OperatorMatrix prod = OperatorMatrix::identity(16);
  for (std::size_t bond : {std::size_t{2}, std::size_t{1}, std::size_t{3},
                           std::size_t{2}})
    prod = prod * embed(s4, 4, bond - 1, 2, 2);
  OperatorMatrix l16 = prod - OperatorMatrix::identity(16);
  expect(l16 == appendix_fused_16(q), "16x16 fused generator");
  expect(sigma_word_product(2, s4) == prod, "sigma word order equivalence");

  expect(fusion_map(2) == appendix_phi(), "fusion map");

  const OperatorMatrix fused9 = appendix_fused_9(q);
  OperatorMatrix first;
  bool first_set = false;
  for (const Rational& s : s_values) {
    OperatorMatrix lam = fission_map(2, Fission::Weighted, s);
    expect(lam == appendix_lambda(s), "fission map at s=" + to_string(s));
    OperatorMatrix lphi = lam * l16 * appendix_phi();
    expect(lphi == fused9, "9x9 fused generator at s=" + to_string(s));
    if (!first_set) {
      first = lphi;
      first_set = true;
    } else {
      expect(lphi == first, "s-independence");
    }
  }
  OperatorMatrix det9 =
      fused_bond_matrix_for(2, s4, Fission::Deterministic) -
      OperatorMatrix::identity(9);
  expect(det9 == fused9, "9x9 fused generator, deterministic fission");

  // transpose conjugation by the squared diagonal transform
  std::vector<Rational> g = appendix_g_diagonal(q);
  OperatorMatrix conj(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      conj.at(i, j) = fused9.at(i, j) * (g[j] * g[j]) / (g[i] * g[i]);
  expect(fused9.transposed() == conj, "transpose conjugation by G^2");

  // the 9x9 is the site reflection of the braided bond generator
  OperatorMatrix bond =
      fused_bond_matrix(2, q, Fission::Deterministic) -
      OperatorMatrix::identity(9);
  expect(reflect_occupancy(bond, 3) == fused9,
         "reflection of the braided bond generator");

  report.pass = failures.empty();
  report.max_residual = report.pass ? "0" : "1";
  if (!report.pass) report.params["first_failure"] = failures.front();
  report.seconds = elapsed(start);
  return report;
}

}  // namespace mdl
