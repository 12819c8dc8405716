#include "mdl/sim.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace mdl {

namespace {

// splitmix64; per-trajectory streams come from hashing (seed, index).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // in (0,1)
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
  double exponential(double rate) { return -std::log(uniform()) / rate; }
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  Rng mix(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
  return mix.next();
}

}  // namespace

CompiledGenerator::CompiledGenerator(const SparseGenerator& gen)
    : exit_rate_(gen.size(), 0.0), moves_(gen.size()) {
  for (std::size_t i = 0; i < gen.size(); ++i) {
    double total = 0.0;
    for (const auto& [j, r] : gen.row(i)) {
      double rd = r.get_d();
      total += rd;
      moves_[i].emplace_back(j, rd);
    }
    exit_rate_[i] = total;
  }
}

double CompiledGenerator::sup_norm() const {
  double best = 0.0;
  for (double r : exit_rate_) best = std::max(best, 2.0 * r);
  return best;
}

Trajectory run_trajectory(const CompiledGenerator& gen, std::size_t start,
                          double t_max, std::uint64_t seed) {
  if (start >= gen.size())
    throw std::out_of_range("run_trajectory: start out of range");
  if (t_max < 0) throw std::invalid_argument("run_trajectory: t_max < 0");
  Rng rng(seed);
  Trajectory traj;
  traj.start = start;
  std::size_t state = start;
  double t = 0.0;
  while (true) {
    double rate = gen.exit_rate(state);
    if (rate <= 0.0) break;  // absorbing
    t += rng.exponential(rate);
    if (t > t_max) break;
    double u = rng.uniform() * rate;
    std::size_t target = state;
    for (const auto& [j, r] : gen.moves(state)) {
      if (u < r) {
        target = j;
        break;
      }
      u -= r;
    }
    traj.events.emplace_back(t, target);
    state = target;
  }
  traj.final_state = state;
  return traj;
}

namespace {

McEstimate batch_mean(const CompiledGenerator& gen, const OperatorMatrix& d,
                      std::size_t start, std::size_t probe, bool probe_is_row,
                      double t, std::size_t n, std::uint64_t seed,
                      std::uint64_t stream_offset) {
  // D values cached as doubles along the probed line
  std::vector<double> values(gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i)
    values[i] = probe_is_row ? d.at(probe, i).get_d() : d.at(i, probe).get_d();

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t blocks = std::min<std::size_t>(hw, 8);
  std::vector<double> sums(blocks, 0.0), sqs(blocks, 0.0);
  auto work = [&](std::size_t b) {
    double sum = 0.0, sq = 0.0;
    for (std::size_t i = b; i < n; i += blocks) {
      Trajectory traj = run_trajectory(gen, start, t,
                                       stream_seed(seed, stream_offset + i));
      double v = values[traj.final_state];
      sum += v;
      sq += v * v;
    }
    sums[b] = sum;
    sqs[b] = sq;
  };
  std::vector<std::thread> pool;
  for (std::size_t b = 1; b < blocks; ++b) pool.emplace_back(work, b);
  work(0);
  for (auto& th : pool) th.join();

  double sum = 0.0, sq = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {  // fixed reduction order
    sum += sums[b];
    sq += sqs[b];
  }
  McEstimate est;
  est.count = n;
  est.seed = seed;
  est.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double var =
        (sq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
  return est;
}

}  // namespace

std::pair<McEstimate, McEstimate> estimate_duality_gap(
    const CompiledGenerator& gen, const OperatorMatrix& d, std::size_t x,
    std::size_t y, double t, std::size_t n_traj, std::uint64_t seed) {
  if (n_traj < 1)
    throw std::invalid_argument("estimate_duality_gap: need n_traj >= 1");
  // E_x[D(X(t), y)]: trajectories from x probe column y of D.
  McEstimate side1 = batch_mean(gen, d, x, y, false, t, n_traj, seed, 0);
  // E_y[D(x, Y(t))]: trajectories from y probe row x of D.
  McEstimate side2 =
      batch_mean(gen, d, y, x, true, t, n_traj, seed, n_traj);
  return {side1, side2};
}

SeriesExpectation exact_expectation(const CompiledGenerator& gen,
                                    const OperatorMatrix& d, std::size_t x,
                                    std::size_t y, double t, long max_order,
                                    double tol) {
  if (t < 0) throw std::invalid_argument("exact_expectation: t < 0");
  const std::size_t n = gen.size();
  std::vector<double> v(n);
  double dmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = d.at(i, y).get_d();
    dmax = std::max(dmax, std::fabs(v[i]));
  }
  const double norm = gen.sup_norm();

  SeriesExpectation out;
  double coeff = 1.0;       // t^k / k!
  double norm_coeff = 1.0;  // (t norm)^k / k!
  for (long k = 0;; ++k) {
    out.value += coeff * v[x];
    out.order = k;
    // tail of the exponential series in the sup norm:
    // sum_{j>k} (t norm)^j / j! <= (t norm)^{k+1}/(k+1)! e^{t norm}
    double tail_first = norm_coeff * (t * norm) / static_cast<double>(k + 1);
    out.remainder_bound = dmax * tail_first * std::exp(t * norm);
    if (out.remainder_bound < tol) break;
    if (k >= max_order)
      throw std::runtime_error(
          "exact_expectation: truncation bound not met at max order");
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double diag = -gen.exit_rate(i);
      w[i] += diag * v[i];
      for (const auto& [j, r] : gen.moves(i)) w[i] += r * v[j];
    }
    v = std::move(w);
    coeff *= t / static_cast<double>(k + 1);
    norm_coeff *= (t * norm) / static_cast<double>(k + 1);
  }
  return out;
}

}  // namespace mdl
