// ising-pca: verification suites, parameter scans, contour dumps, sampling
// and throughput benchmarks for the PCA Ising dynamics.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ising/contours.hpp"
#include "ising/dynamics.hpp"
#include "ising/mc.hpp"
#include "ising/measures.hpp"

using json = nlohmann::json;
using namespace ising;

#ifndef ISING_PCA_BUILD_ID
#define ISING_PCA_BUILD_ID "unknown"
#endif

namespace {

constexpr const char* kOutDirEnv = "ISING_PCA_OUT_DIR";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Common knobs shared by the subcommands; flags override the config file.
struct Options {
  std::string config_path;
  int L = 0;
  std::string bc;
  std::string kind;
  double J = 0;
  double delta = 0;
  double q = 0;
  std::uint64_t seed = 0;
  std::int64_t sweeps = 0;
  std::string out;
  CLI::App* sub = nullptr;
  json cfg;  // parsed config file (empty object when absent)

  void load_config() {
    cfg = json::object();
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path);
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  }

  bool flag(const std::string& name) const { return sub->count(name) > 0; }

  template <typename T>
  T get(const std::string& flag_name, const std::string& key, T flag_value,
        T fallback) const {
    if (flag(flag_name)) return flag_value;
    if (cfg.contains(key)) {
      try {
        return cfg.at(key).get<T>();
      } catch (const json::exception& e) {
        throw ConfigError("bad config value for '" + key + "': " + e.what());
      }
    }
    return fallback;
  }

  int eff_L(int fallback) const { return get("--L", "L", L, fallback); }
  std::string eff_bc(const std::string& fallback) const {
    return get("--bc", "bc", bc, fallback);
  }
  std::string eff_kind(const std::string& fallback) const {
    return get("--kind", "kind", kind, fallback);
  }
  double eff_J(double fallback) const { return get("--J", "J", J, fallback); }
  std::uint64_t eff_seed(std::uint64_t fallback) const {
    return get("--seed", "seed", seed, fallback);
  }
  std::int64_t eff_sweeps(std::int64_t fallback) const {
    return get("--sweeps", "sweeps", sweeps, fallback);
  }
  std::string eff_out() const { return get("--out", "out", out, std::string()); }

  double eff_delta(double fallback) const {
    const bool fd = flag("--delta"), fq = flag("--q");
    if (fd) return delta;
    if (fq) return std::exp(-2.0 * q);
    const bool cd = cfg.contains("delta"), cq = cfg.contains("q");
    if (cd && cq) throw ConfigError("config sets both delta and q");
    if (cd) return cfg.at("delta").get<double>();
    if (cq) return std::exp(-2.0 * cfg.at("q").get<double>());
    return fallback;
  }
};

void add_common(CLI::App* sub, Options& o) {
  o.sub = sub;
  sub->add_option("--config", o.config_path, "flat JSON config file");
  sub->add_option("--L", o.L, "lattice side");
  sub->add_option("--bc", o.bc, "boundary condition: plus | periodic")
      ->check(CLI::IsMember({"plus", "periodic"}));
  sub->add_option("--kind", o.kind, "kernel kind: rev | irrev")
      ->check(CLI::IsMember({"rev", "irrev"}));
  sub->add_option("--J", o.J, "coupling J");
  auto* d = sub->add_option("--delta", o.delta, "self-interaction delta");
  sub->add_option("--q", o.q, "self-coupling q (delta = e^{-2q})")
      ->excludes(d);
  sub->add_option("--seed", o.seed, "RNG seed");
  sub->add_option("--sweeps", o.sweeps, "number of sweeps");
  sub->add_option("--out", o.out, "output path");
}

Bc parse_bc(const std::string& s) {
  if (s == "plus") return Bc::Plus;
  if (s == "periodic") return Bc::Periodic;
  throw ConfigError("unknown bc: " + s);
}

KernelKind resolve_kind(const std::string& kind, Bc bc) {
  if (kind == "rev") {
    return bc == Bc::Plus ? KernelKind::ReversiblePlus
                          : KernelKind::ReversiblePeriodic;
  }
  if (kind == "irrev") {
    if (bc != Bc::Periodic) {
      throw ConfigError("irrev kind requires periodic b.c.");
    }
    return KernelKind::IrreversiblePeriodic;
  }
  throw ConfigError("unknown kind: " + kind);
}

// Honors the output-directory override from the environment.
std::filesystem::path resolve_path(const std::string& requested,
                                   const std::string& fallback_name) {
  std::filesystem::path p =
      requested.empty() ? std::filesystem::path(fallback_name)
                        : std::filesystem::path(requested);
  if (const char* dir = std::getenv(kOutDirEnv)) {
    p = std::filesystem::path(dir) / p.filename();
  }
  return p;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + p.string());
  out << content;
}

// CSV/JSON sink: file when --out (or the env override) is in play, stdout
// otherwise.
void emit(const Options& o, const std::string& content) {
  const std::string out = o.eff_out();
  if (out.empty() && std::getenv(kOutDirEnv) == nullptr) {
    std::cout << content;
  } else {
    write_file(resolve_path(out, o.sub->get_name() + ".out"), content);
  }
}

std::vector<double> delta_grid(const Options& o) {
  if (o.cfg.contains("delta_list")) {
    return o.cfg.at("delta_list").get<std::vector<double>>();
  }
  const double lo = o.cfg.value("delta_min", 1e-4);
  const double hi = o.cfg.value("delta_max", 1e-2);
  const int ppd = o.cfg.value("points_per_decade", 5);
  if (!(lo > 0) || !(hi >= lo) || ppd < 1) {
    throw ConfigError("invalid delta grid");
  }
  const int n =
      static_cast<int>(std::lround(std::log10(hi / lo) * ppd)) + 1;
  std::vector<double> grid(n);
  for (int k = 0; k < n; ++k) {
    grid[k] = lo * std::pow(10.0, static_cast<double>(k) / ppd);
  }
  return grid;
}

// Spin-side value of the contour-gas partition function, used as the
// reference for the Xi identity.
double spin_side_partition(const Geometry& g, int k, const ModelParams& p,
                           KernelKind kind) {
  double sum = 0;
  const std::uint64_t states = std::uint64_t{1} << g.num_sites();
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig s = config_from_index(g, a);
    sum += std::exp(-energy_single(g, p.J, s)) *
           std::pow(f_factor(g, p, kind, s), k);
  }
  sum *= std::exp(-p.J * g.num_bonds()) *
         std::pow(1.0 + p.delta * std::exp(-4.0 * p.J),
                  -static_cast<double>(k) * g.num_sites());
  if (g.bc() == Bc::Periodic) sum /= 2.0;
  return sum;
}

double stationarity_residual(const Geometry& g, const ModelParams& p,
                             KernelKind kind) {
  const MeasureTable pi = pca_measure(g, p, kind);
  const std::uint64_t states = pi.size();
  std::vector<double> next(states, 0.0);
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig sigma = config_from_index(g, a);
    for (std::uint64_t b = 0; b < states; ++b) {
      next[b] += pi.p[a] * transition_prob(g, p, kind, sigma,
                                           config_from_index(g, b));
    }
  }
  double worst = 0;
  for (std::uint64_t b = 0; b < states; ++b) {
    worst = std::max(worst, std::abs(next[b] - pi.p[b]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o) {
  const int L = o.eff_L(3);
  if (L > 3) {
    throw ConfigError("verify enumerates all configurations; L <= 3 required");
  }
  const double J = o.eff_J(2.5);
  const ModelParams p{J, o.eff_delta(1e-3)};

  std::vector<KernelKind> kinds;
  if (o.flag("--kind") || o.cfg.contains("kind")) {
    const std::string bc = o.eff_bc(o.eff_kind("rev") == "irrev" ? "periodic"
                                                                 : "plus");
    kinds.push_back(resolve_kind(o.eff_kind("rev"), parse_bc(bc)));
  } else {
    if (L >= 2) kinds.push_back(KernelKind::ReversiblePlus);
    if (L >= 3) {
      kinds.push_back(KernelKind::ReversiblePeriodic);
      kinds.push_back(KernelKind::IrreversiblePeriodic);
    }
  }

  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, KernelKind kind, double residual,
                    double tolerance) {
    const bool pass = residual <= tolerance;
    all_pass = all_pass && pass;
    checks.push_back({{"check", name},
                      {"kind", kind_name(kind)},
                      {"residual", residual},
                      {"tolerance", tolerance},
                      {"pass", pass}});
  };

  for (KernelKind kind : kinds) {
    Geometry g(L, bc_of(kind));
    const std::uint64_t states = std::uint64_t{1} << g.num_sites();

    record("factorization", kind, factorization_residual(g, p, kind), 1e-12);
    record("stationarity", kind, stationarity_residual(g, p, kind), 1e-10);

    if (is_reversible(kind)) {
      record("detailed-balance", kind,
             detailed_balance_residual(g, p, kind).max_residual, 1e-12);
    } else {
      double worst = 0;
      for (std::uint64_t a = 0; a < states; ++a) {
        worst = std::max(
            worst, dynamical_balance_residual(g, p, config_from_index(g, a)));
      }
      record("dynamical-balance", kind, worst, 1e-12);
      // Relative flow asymmetry; reversible kernels sit at ~1e-15, the
      // irreversible one at O(1), so a LARGE value is the expected outcome.
      const MeasureTable pi = pca_measure(g, p, kind);
      double asym = 0;
      for (std::uint64_t a = 0; a < states; ++a) {
        const SpinConfig sa = config_from_index(g, a);
        for (std::uint64_t b = a + 1; b < states; ++b) {
          const SpinConfig sb = config_from_index(g, b);
          const double fab = pi.p[a] * transition_prob(g, p, kind, sa, sb);
          const double fba = pi.p[b] * transition_prob(g, p, kind, sb, sa);
          if (fab + fba > 1e-300) {
            asym = std::max(asym, std::abs(fab - fba) / (fab + fba));
          }
        }
      }
      const bool found = asym > 1e-6;
      all_pass = all_pass && found;
      checks.push_back({{"check", "irreversibility-witness"},
                        {"kind", kind_name(kind)},
                        {"relative_asymmetry", asym},
                        {"pass", found}});
    }

    double energy_worst = 0;
    for (std::uint64_t a = 0; a < states; ++a) {
      energy_worst = std::max(
          energy_worst, energy_contour_identity(g, J, config_from_index(g, a)));
    }
    record("contour-energy-identity", kind, energy_worst, 0.0);

    std::map<std::vector<int>, int> images;
    for (std::uint64_t a = 0; a < states; ++a) {
      ++images[extract_contour(g, config_from_index(g, a)).edges];
    }
    const int expect = g.bc() == Bc::Plus ? 1 : 2;
    bool map_ok = images.size() * expect == states;
    for (const auto& [edges, n] : images) map_ok = map_ok && n == expect;
    record("contour-map-multiplicity", kind, map_ok ? 0.0 : 1.0, 0.0);

    for (int k = 1; k <= 2; ++k) {
      const double xi = contour_partition(g, k, p.J, p.delta, kind);
      const double ref = spin_side_partition(g, k, p, kind);
      record("xi-identity-k" + std::to_string(k), kind,
             std::abs(xi - ref) / ref, 1e-10);
    }
  }

  json report = {{"config",
                  {{"L", L},
                   {"J", J},
                   {"delta", p.delta},
                   {"kinds", json::array()}}},
                 {"build", ISING_PCA_BUILD_ID},
                 {"checks", checks},
                 {"pass", all_pass}};
  for (KernelKind kind : kinds) {
    report["config"]["kinds"].push_back(kind_name(kind));
  }
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  const std::string out = o.eff_out();
  if (!out.empty() || std::getenv(kOutDirEnv) != nullptr) {
    write_file(resolve_path(out, "verify.json"), text);
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tv-scan

int cmd_tv_scan(const Options& o) {
  const double J = o.eff_J(2.5);
  const Bc bc = parse_bc(o.eff_bc("plus"));
  const KernelKind kind = resolve_kind(o.eff_kind("rev"), bc);
  std::vector<int> L_list =
      o.cfg.value("L_list", std::vector<int>{2, 3, 4});
  if (o.flag("--L")) L_list = {o.L};
  const std::vector<double> deltas = delta_grid(o);

  json echo = {{"J", J},
               {"bc", o.eff_bc("plus")},
               {"kind", o.eff_kind("rev")},
               {"L_list", L_list},
               {"delta_list", deltas}};
  std::ostringstream csv;
  csv << "# config " << echo.dump() << "\n";
  csv << "L,bc,kind,J,delta,tv,sqrt_delta,c1,residual_first_order,"
         "tv_over_delta_l\n";
  for (int L : L_list) {
    if (L > 4) throw ConfigError("tv-scan needs exact tables; L <= 4");
    Geometry g(L, bc);
    const MeasureTable gibbs = gibbs_measure(g, J);
    const double c1 = first_order_coefficient(g, J, kind);
    for (double delta : deltas) {
      const ModelParams p{J, delta};
      const double tv = tv_distance(pca_measure(g, p, kind), gibbs);
      const double sd = std::sqrt(delta_functional(g, p, kind));
      const double resid = first_order_residual(g, p, kind);
      const double ratio = delta > 0 ? tv / (delta * L) : 0.0;
      csv << L << ',' << (bc == Bc::Plus ? "plus" : "periodic") << ','
          << kind_name(kind) << ',' << fmt(J) << ',' << fmt(delta) << ','
          << fmt(tv) << ',' << fmt(sd) << ',' << fmt(c1) << ',' << fmt(resid)
          << ',' << fmt(ratio) << '\n';
    }
  }
  emit(o, csv.str());
  return 0;
}

// ---------------------------------------------------------------------------
// kp-scan

int cmd_kp_scan(const Options& o) {
  const KernelKind kind =
      o.eff_kind("rev") == "irrev" ? KernelKind::IrreversiblePeriodic
                                   : KernelKind::ReversiblePeriodic;
  const double j_min = o.cfg.value("J_min", 1.0);
  const double j_max = o.cfg.value("J_max", 3.0);
  const int j_steps = o.cfg.value("J_steps", 81);
  if (j_steps < 1 || j_max < j_min) throw ConfigError("invalid J grid");
  std::vector<double> deltas =
      o.cfg.value("delta_list", std::vector<double>{0.0, 1e-5, 1e-3});
  if (o.flag("--delta") || o.flag("--q")) deltas = {o.eff_delta(0.0)};

  json echo = {{"kind", o.eff_kind("rev")},
               {"J_min", j_min},
               {"J_max", j_max},
               {"J_steps", j_steps},
               {"delta_list", deltas}};
  std::ostringstream csv;
  csv << "# config " << echo.dump() << "\n";
  csv << "kind,J,delta,A,series_ratio,series_bound,series_target,satisfied,"
         "a_threshold,a_below_threshold,radius_window,truncated_sum,"
         "tail_bound,cutoff\n";
  for (int s = 0; s < j_steps; ++s) {
    const double J =
        j_steps == 1 ? j_min : j_min + (j_max - j_min) * s / (j_steps - 1);
    for (double delta : deltas) {
      const KpReport r = kp_check(J, delta, kind);
      csv << kind_name(kind) << ',' << fmt(J) << ',' << fmt(delta) << ','
          << fmt(r.A) << ',' << fmt(r.series_ratio) << ','
          << fmt(r.series_bound) << ',' << fmt(r.series_target) << ','
          << (r.satisfied ? 1 : 0) << ',' << fmt(r.a_threshold) << ','
          << (r.a_below_threshold ? 1 : 0) << ',' << (r.radius_window ? 1 : 0)
          << ',' << fmt(r.truncated_sum) << ',' << fmt(r.tail_bound) << ','
          << r.cutoff << '\n';
    }
  }
  emit(o, csv.str());
  return 0;
}

// ---------------------------------------------------------------------------
// contour-dump

int cmd_contour_dump(const Options& o) {
  const int L = o.eff_L(6);
  const Bc bc = parse_bc(o.eff_bc("periodic"));
  Geometry g(L, bc);
  const auto flips = o.cfg.value(
      "flips", std::vector<std::vector<int>>{{2, 2}, {2, 4}});
  SpinConfig sigma = all_plus(g);
  for (const auto& rc : flips) {
    if (rc.size() != 2 || rc[0] < 0 || rc[0] >= L || rc[1] < 0 || rc[1] >= L) {
      throw ConfigError("flips entries must be in-range [row, col] pairs");
    }
    sigma[g.site_at(rc[0], rc[1])] = -1;
  }

  const ContourSet gamma = extract_contour(g, sigma);
  auto component_ids = [&](Connectivity c) {
    std::map<int, int> edge_to_component;
    const auto parts = decompose(g, gamma, c);
    for (std::size_t id = 0; id < parts.size(); ++id) {
      for (int e : parts[id].edges) edge_to_component[e] = static_cast<int>(id);
    }
    return std::pair(parts, edge_to_component);
  };
  auto [p_parts, p_ids] = component_ids(Connectivity::PConnected);
  auto [s_parts, s_ids] = component_ids(Connectivity::Standard);

  json segments = json::array();
  for (int e : gamma.edges) {
    const DualEdge d = g.dual_edge(e);
    segments.push_back({{"bond", e},
                        {"midpoint", {d.row2 / 2.0, d.col2 / 2.0}},
                        {"vertical", d.vertical},
                        {"p_component", p_ids.at(e)},
                        {"standard_component", s_ids.at(e)}});
  }
  auto part_json = [](const std::vector<ContourSet>& parts) {
    json out = json::array();
    for (std::size_t id = 0; id < parts.size(); ++id) {
      out.push_back({{"id", id},
                     {"size", parts[id].size()},
                     {"l", parts[id].vertex_classes},
                     {"directed", parts[id].directed_classes}});
    }
    return out;
  };
  json report = {{"config",
                  {{"L", L},
                   {"bc", o.eff_bc("periodic")},
                   {"flips", flips}}},
                 {"length", gamma.size()},
                 {"segments", segments},
                 {"p_components", part_json(p_parts)},
                 {"standard_components", part_json(s_parts)}};
  emit(o, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// sample

int cmd_sample(const Options& o) {
  const int L = o.eff_L(16);
  const Bc bc = parse_bc(o.eff_bc("periodic"));
  const double J = o.eff_J(0.4);
  const std::int64_t sweeps = o.eff_sweeps(1000);
  const std::int64_t burn_in = o.cfg.value("burn_in", sweeps / 10);
  const std::uint64_t seed = o.eff_seed(1);
  const int workers = o.cfg.value("workers", 1);
  const std::string sampler = o.cfg.value("sampler", std::string("pca"));

  Geometry g(L, bc);
  Trace trace;
  json params;
  if (sampler == "glauber") {
    trace = run_glauber(g, J, sweeps, burn_in, seed);
    params = {{"sampler", "glauber"}, {"J", J}};
  } else if (sampler == "pca") {
    const ModelParams p{J, o.eff_delta(1e-3)};
    const KernelKind kind = resolve_kind(o.eff_kind("rev"), bc);
    trace = run_pca(g, p, kind, sweeps, burn_in, seed, workers);
    params = {{"sampler", "pca"},
              {"kind", kind_name(kind)},
              {"J", J},
              {"delta", p.delta}};
  } else {
    throw ConfigError("unknown sampler: " + sampler);
  }

  std::ostringstream csv;
  csv << "sweep,m,e,flips\n";
  for (const TraceRecord& r : trace.records) {
    csv << r.sweep << ',' << fmt(r.magnetization) << ','
        << fmt(r.energy_density) << ',' << r.flips << '\n';
  }
  const std::filesystem::path path = resolve_path(o.eff_out(), "trace.csv");
  write_file(path, csv.str());

  json meta = {{"config",
                {{"L", L},
                 {"bc", o.eff_bc("periodic")},
                 {"sweeps", sweeps},
                 {"burn_in", burn_in},
                 {"seed", seed},
                 {"workers", workers},
                 {"params", params}}},
               {"build", ISING_PCA_BUILD_ID},
               {"wall_seconds", trace.wall_seconds},
               {"burn_in_mean_m", trace.burn_in_mean_m},
               {"burn_in_mean_e", trace.burn_in_mean_e},
               {"records", trace.records.size()}};
  std::filesystem::path meta_path = path;
  meta_path += ".meta.json";
  write_file(meta_path, meta.dump(2) + "\n");
  std::cout << path.string() << "\n" << meta_path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const Options& o) {
  const int L = o.eff_L(64);
  const Bc bc = parse_bc(o.eff_bc("periodic"));
  const ModelParams p{o.eff_J(0.4), o.eff_delta(1e-3)};
  const KernelKind kind = resolve_kind(o.eff_kind("rev"), bc);
  const std::int64_t sweeps = o.eff_sweeps(100);
  const std::vector<int> workers =
      o.cfg.value("workers_list", std::vector<int>{1, 2, 4});
  if (workers.empty()) throw ConfigError("workers_list must be nonempty");

  Geometry g(L, bc);
  const BenchReport r = bench_sweep(g, p, kind, workers, sweeps,
                                    o.eff_seed(1));
  bool consistent = true;
  json entries = json::array();
  for (const BenchEntry& e : r.entries) {
    consistent = consistent && e.identical_to_single;
    entries.push_back({{"workers", e.workers},
                       {"seconds", e.seconds},
                       {"site_updates_per_second", e.site_updates_per_second},
                       {"identical_to_single", e.identical_to_single}});
  }
  json report = {{"config",
                  {{"L", L},
                   {"bc", o.eff_bc("periodic")},
                   {"kind", kind_name(kind)},
                   {"J", p.J},
                   {"delta", p.delta},
                   {"sweeps", sweeps},
                   {"workers_list", workers}}},
                 {"build", ISING_PCA_BUILD_ID},
                 {"entries", entries},
                 {"consistent", consistent}};
  emit(o, report.dump(2) + "\n");
  return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PCA dynamics for the 2D Ising model"};
  app.require_subcommand(1);

  Options overify, otv, okp, odump, osample, obench;
  auto* verify = app.add_subcommand("verify", "run the exact identity suite");
  add_common(verify, overify);
  auto* tv = app.add_subcommand("tv-scan", "TV distance / Delta scan");
  add_common(tv, otv);
  auto* kp = app.add_subcommand("kp-scan", "cluster-expansion condition scan");
  add_common(kp, okp);
  auto* dump = app.add_subcommand("contour-dump", "contour decomposition dump");
  add_common(dump, odump);
  auto* sample = app.add_subcommand("sample", "run a sampler, write a trace");
  add_common(sample, osample);
  auto* bench = app.add_subcommand("bench", "sweep throughput benchmark");
  add_common(bench, obench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      overify.load_config();
      return cmd_verify(overify);
    }
    if (tv->parsed()) {
      otv.load_config();
      return cmd_tv_scan(otv);
    }
    if (kp->parsed()) {
      okp.load_config();
      return cmd_kp_scan(okp);
    }
    if (dump->parsed()) {
      odump.load_config();
      return cmd_contour_dump(odump);
    }
    if (sample->parsed()) {
      osample.load_config();
      return cmd_sample(osample);
    }
    if (bench->parsed()) {
      obench.load_config();
      return cmd_bench(obench);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
