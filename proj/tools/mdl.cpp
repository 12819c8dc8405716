// Command-line front end: exact verification suites, bond-rate
// inspection, duality evaluation and Monte-Carlo simulation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mdl/coideal.hpp"
#include "mdl/duality.hpp"
#include "mdl/fusion.hpp"
#include "mdl/generators.hpp"
#include "mdl/hecke.hpp"
#include "mdl/sim.hpp"
#include "mdl/verify.hpp"

using nlohmann::json;
using namespace mdl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::size_t state_cap_from_env() {
  if (const char* cap = std::getenv("MDL_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw CLI::ValidationError("MDL_STATE_CAP must be a positive integer");
  }
  return kDefaultStateCap;
}

Rational unit_param(const std::string& text, const std::string& name) {
  Rational r = parse_rational(text);
  if (!in_open_unit_interval(r))
    throw CLI::ValidationError(name + " must lie strictly inside (0,1)");
  return r;
}

json run_config_echo(const std::string& command,
                     const std::map<std::string, std::string>& fields) {
  json cfg;
  cfg["command"] = command;
  for (const auto& [k, v] : fields) cfg[k] = v;
  return cfg;
}

void emit(const json& out, const std::string& out_path) {
  std::string text = out.dump(2);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text << "\n";
  }
  std::cout << text << "\n";
}

// ---- verify suites ------------------------------------------------------

std::vector<DualityReport> suite_msasep(long L, int n, const Rational& q,
                                        std::size_t cap) {
  std::vector<DualityReport> reports;
  for (long Li : std::vector<long>{L > 0 ? L : 3, L > 0 ? L : 4}) {
    for (int ni : std::vector<int>{n > 0 ? n : 1, n > 0 ? n : 2}) {
      SparseGenerator gen = build_msasep(Li, ni, q, cap);
      OperatorMatrix d = duality_matrix(gen.space(), QParams{q, {}, {}});
      reports.push_back(check_markov_duality(
          gen, d, "msasep duality",
          {{"L", std::to_string(Li)}, {"n", std::to_string(ni)},
           {"q", to_string(q)}}));
      if (n > 0) break;
    }
    if (L > 0) break;
  }
  return reports;
}

std::vector<DualityReport> suite_open(long L, const Rational& q,
                                      const Rational& Q, std::size_t cap) {
  std::vector<DualityReport> reports;
  std::vector<long> sizes = L > 0 ? std::vector<long>{L}
                                  : std::vector<long>{1, 2, 3};
  for (long Li : sizes) {
    SparseGenerator gen = build_open(Li, 1, q, Q, cap);
    OperatorMatrix d = duality_matrix(gen.space(), QParams{q, Q, {}});
    std::map<std::string, std::string> params{
        {"L", std::to_string(Li)}, {"q", to_string(q)}, {"Q", to_string(Q)}};
    reports.push_back(check_markov_duality(gen, d, "open duality", params));
    reports.push_back(check_detailed_balance(
        gen, reversible_measure_open(Li, q, Q), "open reversibility", params));
    if (Li <= 2) {
      GroundFrame frame = build_ground_frame(Li, q, Q, cap);
      reports.push_back(check_commutation(
          frame.h, coproduct_f_half(Li, q, Q), "symmetry commutation", params));
      DualityReport sym{"symmetry duality route", params};
      auto start = std::chrono::steady_clock::now();
      sym.pass = duality_open_from_symmetry(Li, q, Q) ==
                 duality_matrix(gen.space(), QParams{q, Q, {}});
      sym.max_residual = sym.pass ? "0" : "1";
      sym.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      reports.push_back(sym);
    }
  }
  return reports;
}

std::vector<DualityReport> suite_braided(long L, long m, const Rational& q,
                                         std::size_t cap) {
  std::vector<DualityReport> reports;
  std::vector<long> ms = m > 0 ? std::vector<long>{m} : std::vector<long>{1, 2};
  std::vector<long> sizes = L > 0 ? std::vector<long>{L}
                                  : std::vector<long>{2, 3};
  for (long mi : ms)
    for (long Li : sizes) {
      SparseGenerator gen = build_braided(Li, mi, q, BraidedSource::ClosedForm,
                                          cap);
      OperatorMatrix d = duality_matrix(gen.space(), QParams{q, {}, mi});
      reports.push_back(check_markov_duality(
          gen, d, "braided duality",
          {{"L", std::to_string(Li)}, {"m", std::to_string(mi)},
           {"q", to_string(q)}}));
    }
  for (long mi : (m > 0 ? std::vector<long>{m} : std::vector<long>{1, 2, 3})) {
    DualityReport oracle{"braided rate oracle triangle",
                         {{"m", std::to_string(mi)}, {"q", to_string(q)}}};
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    OperatorMatrix sigma = fused_bond_matrix(mi, q, Fission::Deterministic);
    for (long k1 = 0; k1 <= mi && ok; ++k1)
      for (long k2 = 0; k2 <= mi && ok; ++k2) {
        std::vector<Rational> aux = aux_process_distribution(mi, k1, k2, q);
        for (long l2 = 0; l2 <= mi; ++l2) {
          long l1 = k1 + k2 - l2;
          if (l1 < 0 || l1 > mi) continue;
          const Rational& entry =
              sigma.at(k1 * (mi + 1) + k2, l1 * (mi + 1) + l2);
          if (entry != braided_rate_formula(mi, k1, k2, l2, q) ||
              entry != aux[l2])
            ok = false;
        }
      }
    RecurrenceReport rec = check_rate_recurrence(mi, q);
    oracle.pass = ok && rec.ok();
    oracle.max_residual = oracle.pass ? "0" : "1";
    oracle.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    reports.push_back(oracle);
  }
  return reports;
}

std::vector<DualityReport> suite_algebra(const Rational& q, const Rational& Q) {
  std::vector<DualityReport> reports;
  auto push = [&](const std::string& name, bool ok,
                  std::map<std::string, std::string> params) {
    DualityReport r{name, std::move(params)};
    r.pass = ok;
    r.max_residual = ok ? "0" : "1";
    reports.push_back(r);
  };
  for (int n : {1, 2}) {
    OperatorMatrix r = r_matrix_type_a(n, q);
    push("type-A braid relation",
         check_braid_relation(r, static_cast<std::size_t>(n) + 1),
         {{"n", std::to_string(n)}, {"q", to_string(q)}});
    push("type-A quadratic relation",
         check_hecke_quadratic(r.scaled(q), q - 1, q),
         {{"n", std::to_string(n)}, {"q", to_string(q)}});
  }
  Rational rp = make_rational(2, 5), sp = make_rational(3, 7);
  push("two-parameter quadratic relation",
       check_hecke_quadratic(r_matrix_two_param(1, rp, sp).scaled(sp), sp - rp,
                             rp * sp),
       {{"r", to_string(rp)}, {"s", to_string(sp)}});
  push("two-parameter braid relation",
       check_braid_relation(r_matrix_two_param(1, rp, sp), 2),
       {{"r", to_string(rp)}, {"s", to_string(sp)}});
  OperatorMatrix bulk = hecke_type_b_bulk(1, q);
  OperatorMatrix boundary = hecke_type_b_boundary(1, Q);
  push("type-B bulk quadratic",
       check_hecke_quadratic(bulk, Rational(1) / q - q, Rational(1)),
       {{"q", to_string(q)}});
  push("type-B boundary quadratic",
       check_hecke_quadratic(boundary, Rational(1) / Q - Q, Rational(1)),
       {{"Q", to_string(Q)}});
  push("type-B mixed braid relation", check_type_b_mixed(boundary, bulk, 3),
       {{"q", to_string(q)}, {"Q", to_string(Q)}});
  push("conjugated bulk move is stochastic",
       stochastic_bulk_move(1, q).is_row_stochastic(), {{"q", to_string(q)}});
  push("conjugated boundary move is stochastic",
       stochastic_boundary_move(1, Q).is_row_stochastic(),
       {{"Q", to_string(Q)}});
  for (long mi : {1L, 2L, 3L})
    push("fused braid relation",
         check_braid_relation(fused_bond_matrix(mi, q, Fission::Deterministic),
                              static_cast<std::size_t>(mi) + 1),
         {{"m", std::to_string(mi)}, {"q", to_string(q)}});
  return reports;
}

int cmd_verify(const std::string& suite, long L, int n, long m,
               const Rational& q, const Rational& Q,
               const std::vector<Rational>& s_values,
               const std::string& out_path) {
  std::size_t cap = state_cap_from_env();
  std::vector<DualityReport> reports;
  if (suite == "msasep" || suite == "all") {
    auto r = suite_msasep(L, n, q, cap);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "open" || suite == "all") {
    auto r = suite_open(L, q, Q, cap);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "braided" || suite == "all") {
    auto r = suite_braided(L, m, q, cap);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "algebra" || suite == "all") {
    auto r = suite_algebra(q, Q);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "appendix" || suite == "all")
    reports.push_back(check_appendix_fixtures(q, s_values));

  bool all_pass = true;
  json out;
  out["config"] = run_config_echo(
      "verify", {{"suite", suite},
                 {"q", to_string(q)},
                 {"Q", to_string(Q)},
                 {"cap", std::to_string(cap)}});
  out["reports"] = json::array();
  for (const DualityReport& r : reports) {
    all_pass = all_pass && r.pass;
    out["reports"].push_back(json::parse(report_to_json(r)));
    std::cerr << (r.pass ? "pass" : "FAIL") << "  " << r.identity;
    for (const auto& [k, v] : r.params) std::cerr << " " << k << "=" << v;
    std::cerr << "\n";
  }
  out["pass"] = all_pass;
  emit(out, out_path);
  std::cerr << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
            << reports.size() << " reports)\n";
  return all_pass ? kExitPass : kExitFail;
}

int cmd_rates(long m, long k1, long k2, const Rational& q,
              const std::string& out_path) {
  if (k1 < 0 || k1 > m || k2 < 0 || k2 > m)
    throw CLI::ValidationError("--k1/--k2 must lie in 0..m");
  OperatorMatrix sigma = fused_bond_matrix(m, q, Fission::Deterministic);
  std::vector<Rational> aux = aux_process_distribution(m, k1, k2, q);
  json out;
  out["config"] = run_config_echo(
      "rates", {{"m", std::to_string(m)},
                {"k1", std::to_string(k1)},
                {"k2", std::to_string(k2)},
                {"q", to_string(q)}});
  out["rows"] = json::array();
  std::cerr << "l2  l1  closed-form        fused-matrix       aux-chain\n";
  for (long l2 = 0; l2 <= m; ++l2) {
    long l1 = k1 + k2 - l2;
    if (l1 < 0 || l1 > m) continue;
    Rational closed = braided_rate(m, k1, k2, l2, q);
    Rational fused = sigma.at(k1 * (m + 1) + k2, l1 * (m + 1) + l2);
    json row;
    row["l2"] = l2;
    row["l1"] = l1;
    row["closed_form"] = to_string(closed);
    row["fused_matrix"] = to_string(fused);
    row["aux_chain"] = to_string(aux[l2]);
    out["rows"].push_back(row);
    std::cerr << l2 << "   " << l1 << "   " << to_string(closed) << "  "
              << to_string(fused) << "  " << to_string(aux[l2]) << "\n";
  }
  emit(out, out_path);
  return kExitPass;
}

int cmd_duality(const std::string& model, const std::string& eta_text,
                const std::string& xi_text, const Rational& q,
                const Rational& Q, int species, long m,
                const std::string& out_path) {
  Config eta = parse_config(eta_text);
  Config xi = parse_config(xi_text);
  Rational value;
  if (model == "msasep") {
    int n = species;
    if (n <= 0)
      for (int v : eta) n = std::max(n, v);
    for (int v : xi) n = std::max(n, v);
    value = duality_msasep(eta, xi, n, q);
  } else if (model == "open") {
    value = duality_open(eta, xi, q, Q);
  } else if (model == "braided") {
    if (m <= 0) throw CLI::ValidationError("braided duality needs --m");
    value = duality_braided(eta, xi, m, q);
  } else {
    throw CLI::ValidationError("unknown model '" + model + "'");
  }
  json out;
  out["config"] = run_config_echo(
      "duality", {{"model", model}, {"eta", format_config(eta)},
                  {"xi", format_config(xi)}, {"q", to_string(q)}});
  out["value"] = to_string(value);
  emit(out, out_path);
  std::cerr << "D(eta, xi) = " << to_string(value) << "\n";
  return kExitPass;
}

int cmd_simulate(const std::string& model, long L, int species, int r, long m,
                 const Rational& q, const Rational& Q,
                 const std::string& x_text, const std::string& y_text,
                 double t, std::size_t n_traj, std::uint64_t seed,
                 const std::string& out_path) {
  std::size_t cap = state_cap_from_env();
  std::optional<SparseGenerator> gen;
  std::optional<OperatorMatrix> d;
  if (model == "msasep") {
    if (species <= 0) throw CLI::ValidationError("msasep needs --species");
    gen.emplace(build_msasep(L, species, q, cap));
    d.emplace(duality_matrix(gen->space(), QParams{q, {}, {}}));
  } else if (model == "open") {
    if (r != 1) throw CLI::ValidationError("simulate open supports r = 1");
    gen.emplace(build_open(L, 1, q, Q, cap));
    d.emplace(duality_matrix(gen->space(), QParams{q, Q, {}}));
  } else if (model == "braided") {
    if (m <= 0) throw CLI::ValidationError("braided simulate needs --m");
    gen.emplace(build_braided(L, m, q, BraidedSource::ClosedForm, cap));
    d.emplace(duality_matrix(gen->space(), QParams{q, {}, m}));
  } else {
    throw CLI::ValidationError("unknown model '" + model + "'");
  }
  std::size_t x = gen->space().index_of(parse_config(x_text));
  std::size_t y = gen->space().index_of(parse_config(y_text));
  CompiledGenerator cg(*gen);
  auto [s1, s2] = estimate_duality_gap(cg, *d, x, y, t, n_traj, seed);
  double se = std::sqrt(s1.std_error * s1.std_error +
                        s2.std_error * s2.std_error);
  double z = se > 0 ? (s1.mean - s2.mean) / se : 0.0;

  json out;
  out["config"] = run_config_echo(
      "simulate", {{"model", model}, {"L", std::to_string(L)},
                   {"x", x_text}, {"y", y_text},
                   {"t", std::to_string(t)},
                   {"n", std::to_string(n_traj)},
                   {"seed", std::to_string(seed)},
                   {"q", to_string(q)}});
  out["side1"] = {{"mean", s1.mean}, {"se", s1.std_error}};
  out["side2"] = {{"mean", s2.mean}, {"se", s2.std_error}};
  out["z"] = z;
  emit(out, out_path);
  std::cerr << "E_x[D(X(t),y)] = " << s1.mean << " +- " << s1.std_error
            << ", E_y[D(x,Y(t))] = " << s2.mean << " +- " << s2.std_error
            << ", z = " << z << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Markov-duality verification for asymmetric exclusion models"};
  app.require_subcommand(1);

  std::string q_text = "1/2", Q_text = "1/3";
  std::vector<std::string> s_texts;
  long L = 0, m = 0, k1 = 0, k2 = 0;
  int n = 0, r = 1;
  std::string suite, model, eta_text, xi_text, x_text, y_text, out_path;
  double t = 1.0;
  std::size_t n_traj = 100000;
  std::uint64_t seed = 42;

  CLI::App* verify = app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("suite", suite, "msasep|open|braided|algebra|appendix|all")
      ->required()
      ->check(CLI::IsMember({"msasep", "open", "braided", "algebra", "appendix",
                             "all"}));
  verify->add_option("--L", L);
  verify->add_option("--n", n, "species count (msasep)");
  verify->add_option("--m", m, "max occupancy (braided)");
  verify->add_option("--q", q_text);
  verify->add_option("--Q", Q_text);
  verify->add_option("--s", s_texts, "fission weights for the appendix suite");
  verify->add_option("--out", out_path, "also write the JSON report here");

  CLI::App* rates = app.add_subcommand("rates", "braided bond-rate distribution");
  rates->add_option("--m", m)->required();
  rates->add_option("--k1", k1)->required();
  rates->add_option("--k2", k2)->required();
  rates->add_option("--q", q_text);
  rates->add_option("--out", out_path);

  CLI::App* duality = app.add_subcommand("duality", "evaluate a duality functional");
  duality->add_option("--model", model)->required();
  duality->add_option("--eta", eta_text)->required();
  duality->add_option("--xi", xi_text)->required();
  duality->add_option("--q", q_text);
  duality->add_option("--Q", Q_text);
  duality->add_option("--species", n, "species count (msasep; default inferred)");
  duality->add_option("--m", m);
  duality->add_option("--out", out_path);

  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo duality gap");
  simulate->add_option("--model", model)->required();
  simulate->add_option("--L", L)->required();
  simulate->add_option("--species", n);
  simulate->add_option("--r", r);
  simulate->add_option("--m", m);
  simulate->add_option("--q", q_text);
  simulate->add_option("--Q", Q_text);
  simulate->add_option("--x", x_text)->required();
  simulate->add_option("--y", y_text)->required();
  simulate->add_option("--t", t);
  simulate->add_option("--n", n_traj, "trajectories per side");
  simulate->add_option("--seed", seed);
  simulate->add_option("--out", out_path);

  CLI::App* report = app.add_subcommand("report", "run all suites, write one report");
  report->add_option("--q", q_text);
  report->add_option("--Q", Q_text);
  report->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
    Rational q = unit_param(q_text, "--q");
    Rational Q = unit_param(Q_text, "--Q");
    std::vector<Rational> s_values;
    for (const std::string& s : s_texts) s_values.push_back(unit_param(s, "--s"));
    if (s_values.empty())
      s_values = {make_rational(1, 3), make_rational(1, 2)};
    else if (s_values.size() == 1)
      s_values.push_back(s_values[0] == make_rational(1, 2)
                             ? make_rational(1, 3)
                             : make_rational(1, 2));

    if (verify->parsed()) return cmd_verify(suite, L, n, m, q, Q, s_values, out_path);
    if (rates->parsed()) return cmd_rates(m, k1, k2, q, out_path);
    if (duality->parsed())
      return cmd_duality(model, eta_text, xi_text, q, Q, n, m, out_path);
    if (simulate->parsed())
      return cmd_simulate(model, L, n, r, m, q, Q, x_text, y_text, t, n_traj,
                          seed, out_path);
    if (report->parsed())
      return cmd_verify("all", 0, 0, 0, q, Q, s_values,
                        out_path.empty() ? "mdl_report.json" : out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
