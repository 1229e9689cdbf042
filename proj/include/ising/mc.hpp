#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ising/dynamics.hpp"

namespace ising {

struct TraceRecord {
  std::int64_t sweep;
  double magnetization;   // sum sigma_i / |Lambda|
  double energy_density;  // H / |Lambda|
  std::int64_t flips;
};

struct Trace {
  std::vector<TraceRecord> records;  // post burn-in
  std::int64_t sweeps = 0;
  std::int64_t burn_in = 0;
  double burn_in_mean_m = 0;
  double burn_in_mean_e = 0;
  std::uint64_t seed = 0;
  int L = 0;
  std::string kind;
  double J = 0;
  double delta = 0;  // NaN for the Glauber baseline
  int workers = 1;
  double wall_seconds = 0;
  SpinConfig final_config;
};

// Parallel PCA sampler; deterministic in (seed, params), independent of
// `workers`. Starts from all-plus unless `initial` is given.
Trace run_pca(const Geometry& g, const ModelParams& p, KernelKind kind,
              std::int64_t sweeps, std::int64_t burn_in, std::uint64_t seed,
              int workers = 1, const SpinConfig* initial = nullptr);

// Single-spin-flip heat-bath baseline; sites visited in a fresh random
// permutation each sweep. Samples the Gibbs measure.
Trace run_glauber(const Geometry& g, double J, std::int64_t sweeps,
                  std::int64_t burn_in, std::uint64_t seed,
                  const SpinConfig* initial = nullptr);

struct BatchStats {
  double mean = 0;
  double std_error = 0;
  int batches = 0;
};

BatchStats batch_means(std::span<const double> series, int batches = 32);

struct BenchEntry {
  int workers = 0;
  double seconds = 0;
  double site_updates_per_second = 0;
  bool identical_to_single = true;
};

struct BenchReport {
  int L = 0;
  std::int64_t sweeps = 0;
  std::vector<BenchEntry> entries;
};

BenchReport bench_sweep(const Geometry& g, const ModelParams& p,
                        KernelKind kind, const std::vector<int>& workers,
                        std::int64_t sweeps, std::uint64_t seed = 1);

}  // namespace ising
