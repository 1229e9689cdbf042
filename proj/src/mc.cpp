#include "ising/mc.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ising/rng.hpp"

namespace ising {

namespace {

using Clock = std::chrono::steady_clock;

double magnetization(const SpinConfig& s) {
  long long sum = std::accumulate(s.begin(), s.end(), 0LL);
  return static_cast<double>(sum) / static_cast<double>(s.size());
}

void record_observables(const Geometry& g, double J, const SpinConfig& s,
                        std::int64_t sweep_index, std::int64_t flips,
                        std::int64_t burn_in, Trace& trace, double& burn_m,
                        double& burn_e) {
  const double m = magnetization(s);
  const double e = energy_single(g, J, s) / g.num_sites();
  if (sweep_index < burn_in) {
    burn_m += m;
    burn_e += e;
  } else {
    trace.records.push_back(TraceRecord{sweep_index, m, e, flips});
  }
}

}  // namespace

Trace run_pca(const Geometry& g, const ModelParams& p, KernelKind kind,
              std::int64_t sweeps, std::int64_t burn_in, std::uint64_t seed,
              int workers, const SpinConfig* initial) {
  if (sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
  if (burn_in < 0 || burn_in >= sweeps) {
    throw std::invalid_argument("burn_in must lie in [0, sweeps)");
  }
  const auto start = Clock::now();

  Trace trace;
  trace.sweeps = sweeps;
  trace.burn_in = burn_in;
  trace.seed = seed;
  trace.L = g.side();
  trace.kind = kind_name(kind);
  trace.J = p.J;
  trace.delta = p.delta;
  trace.workers = workers;
  trace.records.reserve(sweeps - burn_in);

  SpinConfig cur = initial ? *initial : all_plus(g);
  double burn_m = 0, burn_e = 0;
  for (std::int64_t s = 0; s < sweeps; ++s) {
    SpinConfig next = sweep(g, p, kind, cur, seed, s, workers);
    std::int64_t flips = 0;
    for (int i = 0; i < g.num_sites(); ++i) {
      if (next[i] != cur[i]) ++flips;
    }
    cur = std::move(next);
    record_observables(g, p.J, cur, s, flips, burn_in, trace, burn_m, burn_e);
  }
  if (burn_in > 0) {
    trace.burn_in_mean_m = burn_m / burn_in;
    trace.burn_in_mean_e = burn_e / burn_in;
  }
  trace.final_config = std::move(cur);
  trace.wall_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return trace;
}

Trace run_glauber(const Geometry& g, double J, std::int64_t sweeps,
                  std::int64_t burn_in, std::uint64_t seed,
                  const SpinConfig* initial) {
  if (sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
  if (burn_in < 0 || burn_in >= sweeps) {
    throw std::invalid_argument("burn_in must lie in [0, sweeps)");
  }
  const auto start = Clock::now();
  const int n = g.num_sites();

  Trace trace;
  trace.sweeps = sweeps;
  trace.burn_in = burn_in;
  trace.seed = seed;
  trace.L = g.side();
  trace.kind = "glauber";
  trace.J = J;
  trace.delta = std::numeric_limits<double>::quiet_NaN();
  trace.records.reserve(sweeps - burn_in);

  // Heat-bath probability of +1 given the neighbor sum S in [-4, 4].
  double p_up[9];
  for (int S = -4; S <= 4; ++S) {
    p_up[S + 4] = 1.0 / (1.0 + std::exp(-2.0 * J * S));
  }

  SpinConfig cur = initial ? *initial : all_plus(g);
  std::vector<int> order(n);
  double burn_m = 0, burn_e = 0;
  for (std::int64_t s = 0; s < sweeps; ++s) {
    // Fresh uniform permutation of the sites.
    std::iota(order.begin(), order.end(), 0);
    for (int k = n - 1; k > 0; --k) {
      const double u = rng::uniform(seed, rng::kStreamGlauberOrder, s, k);
      const int j = static_cast<int>(u * (k + 1));
      std::swap(order[k], order[j]);
    }
    std::int64_t flips = 0;
    for (int k = 0; k < n; ++k) {
      const int i = order[k];
      const auto& nb = g.neighbors(i);
      int S = g.external_contacts(i);
      for (int d = 0; d < 4; ++d) {
        if (nb[d] != kExternal) S += cur[nb[d]];
      }
      const double u = rng::uniform(seed, rng::kStreamGlauberFlip, s, k);
      const Spin next = u < p_up[S + 4] ? Spin{1} : Spin{-1};
      if (next != cur[i]) ++flips;
      cur[i] = next;
    }
    record_observables(g, J, cur, s, flips, burn_in, trace, burn_m, burn_e);
  }
  if (burn_in > 0) {
    trace.burn_in_mean_m = burn_m / burn_in;
    trace.burn_in_mean_e = burn_e / burn_in;
  }
  trace.final_config = std::move(cur);
  trace.wall_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return trace;
}

BatchStats batch_means(std::span<const double> series, int batches) {
  BatchStats stats;
  if (series.empty() || batches < 2) return stats;
  batches = std::min<int>(batches, static_cast<int>(series.size()));
  const std::size_t len = series.size() / batches;
  std::vector<double> means(batches);
  for (int b = 0; b < batches; ++b) {
    double acc = 0;
    for (std::size_t k = 0; k < len; ++k) {
      acc += series[b * len + k];
    }
    means[b] = acc / len;
  }
  double mean = std::accumulate(means.begin(), means.end(), 0.0) / batches;
  double var = 0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= (batches - 1);
  stats.mean = mean;
  stats.std_error = std::sqrt(var / batches);
  stats.batches = batches;
  return stats;
}

BenchReport bench_sweep(const Geometry& g, const ModelParams& p,
                        KernelKind kind, const std::vector<int>& workers,
                        std::int64_t sweeps, std::uint64_t seed) {
  BenchReport report;
  report.L = g.side();
  report.sweeps = sweeps;

  SpinConfig reference;
  for (int w : workers) {
    SpinConfig cur = all_plus(g);
    const auto start = Clock::now();
    for (std::int64_t s = 0; s < sweeps; ++s) {
      cur = sweep(g, p, kind, cur, seed, s, w);
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    BenchEntry entry;
    entry.workers = w;
    entry.seconds = secs;
    entry.site_updates_per_second =
        static_cast<double>(g.num_sites()) * sweeps / secs;
    if (reference.empty()) {
      reference = cur;
    }
    entry.identical_to_single = cur == reference;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace ising
