#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ising/mc.hpp"
#include "ising/measures.hpp"

using namespace ising;

namespace {

std::vector<double> column_m(const Trace& t, bool absolute = false) {
  std::vector<double> out;
  out.reserve(t.records.size());
  for (const TraceRecord& r : t.records) {
    out.push_back(absolute ? std::abs(r.magnetization) : r.magnetization);
  }
  return out;
}

std::vector<double> column_e(const Trace& t) {
  std::vector<double> out;
  out.reserve(t.records.size());
  for (const TraceRecord& r : t.records) out.push_back(r.energy_density);
  return out;
}

double exact_expectation(const Geometry& g, const MeasureTable& table,
                         double J, bool abs_m) {
  double acc = 0;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    const SpinConfig s = config_from_index(g, a);
    double obs;
    if (abs_m) {
      long long sum = 0;
      for (Spin v : s) sum += v;
      obs = std::abs(static_cast<double>(sum)) / g.num_sites();
    } else {
      obs = energy_single(g, J, s) / g.num_sites();
    }
    acc += table.p[a] * obs;
  }
  return acc;
}

}  // namespace

TEST_CASE("pca runs are deterministic and worker-independent") {
  Geometry g(8, Bc::Periodic);
  const ModelParams p{0.4, 0.5};
  const Trace a = run_pca(g, p, KernelKind::ReversiblePeriodic, 50, 10, 7, 1);
  const Trace b = run_pca(g, p, KernelKind::ReversiblePeriodic, 50, 10, 7, 1);
  const Trace c = run_pca(g, p, KernelKind::ReversiblePeriodic, 50, 10, 7, 3);
  CHECK(a.final_config == b.final_config);
  CHECK(a.final_config == c.final_config);
  REQUIRE(a.records.size() == c.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    CHECK(a.records[k].magnetization == c.records[k].magnetization);
    CHECK(a.records[k].flips == c.records[k].flips);
  }
  const Trace d = run_pca(g, p, KernelKind::ReversiblePeriodic, 50, 10, 8, 1);
  CHECK(a.final_config != d.final_config);
}

TEST_CASE("trace bookkeeping") {
  Geometry g(4, Bc::Periodic);
  const ModelParams p{0.4, 0.5};
  const Trace t = run_pca(g, p, KernelKind::ReversiblePeriodic, 30, 12, 1);
  CHECK(t.records.size() == 18);
  CHECK(t.records.front().sweep == 12);
  CHECK(t.records.back().sweep == 29);
  CHECK(t.L == 4);
  CHECK(t.kind == "rev-per");
  CHECK(t.wall_seconds >= 0.0);
  CHECK_THROWS_AS(run_pca(g, p, KernelKind::ReversiblePeriodic, 0, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_pca(g, p, KernelKind::ReversiblePeriodic, 10, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("delta=0 freezes the chain") {
  Geometry g(6, Bc::Periodic);
  const ModelParams p{1.0, 0.0};
  const Trace t = run_pca(g, p, KernelKind::ReversiblePeriodic, 20, 0, 3);
  CHECK(t.final_config == all_plus(g));
  for (const TraceRecord& r : t.records) {
    CHECK(r.flips == 0);
    CHECK(r.magnetization == 1.0);
  }
  SpinConfig init = all_plus(g);
  init[5] = -1;
  init[17] = -1;
  const Trace u =
      run_pca(g, p, KernelKind::ReversiblePeriodic, 5, 0, 3, 1, &init);
  CHECK(u.final_config == init);
}

TEST_CASE("flip rate grows with delta") {
  Geometry g(8, Bc::Periodic);
  double last = -1.0;
  for (double delta : {0.05, 0.3, 0.9}) {
    const Trace t = run_pca(g, ModelParams{0.3, delta},
                            KernelKind::ReversiblePeriodic, 2000, 200, 5);
    double flips = 0;
    for (const TraceRecord& r : t.records) flips += r.flips;
    flips /= t.records.size();
    CHECK(flips > last);
    last = flips;
  }
}

TEST_CASE("pca sampler reproduces the exact stationary averages") {
  Geometry g(3, Bc::Periodic);
  const ModelParams p{0.5, 0.3};
  const KernelKind kind = KernelKind::ReversiblePeriodic;
  const MeasureTable table = pca_measure(g, p, kind);
  const Trace t = run_pca(g, p, kind, 200000, 2000, 11);

  const BatchStats e = batch_means(column_e(t));
  const double e_exact = exact_expectation(g, table, p.J, false);
  CHECK(std::abs(e.mean - e_exact) <= std::max(5 * e.std_error, 1e-3));

  const BatchStats m = batch_means(column_m(t, true));
  const double m_exact = exact_expectation(g, table, p.J, true);
  CHECK(std::abs(m.mean - m_exact) <= std::max(5 * m.std_error, 1e-3));
}

TEST_CASE("irreversible sampler shares the same stationary measure") {
  Geometry g(3, Bc::Periodic);
  const ModelParams p{0.5, 0.3};
  const MeasureTable table =
      pca_measure(g, p, KernelKind::IrreversiblePeriodic);
  const Trace t =
      run_pca(g, p, KernelKind::IrreversiblePeriodic, 200000, 2000, 13);
  const BatchStats e = batch_means(column_e(t));
  const double e_exact = exact_expectation(g, table, p.J, false);
  CHECK(std::abs(e.mean - e_exact) <= std::max(5 * e.std_error, 1e-3));
}

TEST_CASE("glauber baseline samples the Gibbs measure") {
  Geometry g(3, Bc::Periodic);
  const double J = 0.4;
  const MeasureTable gibbs = gibbs_measure(g, J);
  const Trace t = run_glauber(g, J, 200000, 2000, 17);
  CHECK(t.kind == "glauber");
  CHECK(std::isnan(t.delta));

  const BatchStats e = batch_means(column_e(t));
  const double e_exact = exact_expectation(g, gibbs, J, false);
  CHECK(std::abs(e.mean - e_exact) <= std::max(5 * e.std_error, 2e-3));

  const BatchStats m = batch_means(column_m(t, true));
  const double m_exact = exact_expectation(g, gibbs, J, true);
  CHECK(std::abs(m.mean - m_exact) <= std::max(5 * m.std_error, 2e-3));

  // Symmetric measure: the signed magnetization averages to zero.
  const BatchStats ms = batch_means(column_m(t));
  CHECK(std::abs(ms.mean) <= std::max(5 * ms.std_error, 2e-3));
}

TEST_CASE("glauber runs are deterministic in the seed") {
  // Weak coupling keeps the chain disordered, so distinct seeds cannot
  // land on the same configuration by relaxing to the ground state.
  Geometry g(5, Bc::Plus);
  const Trace a = run_glauber(g, 0.2, 40, 0, 9);
  const Trace b = run_glauber(g, 0.2, 40, 0, 9);
  const Trace c = run_glauber(g, 0.2, 40, 0, 10);
  CHECK(a.final_config == b.final_config);
  CHECK(a.final_config != c.final_config);
}

TEST_CASE("batch means") {
  SUBCASE("constant series has zero error") {
    std::vector<double> s(640, 2.5);
    const BatchStats st = batch_means(s);
    CHECK(st.mean == doctest::Approx(2.5));
    CHECK(st.std_error == doctest::Approx(0.0));
    CHECK(st.batches == 32);
  }
  SUBCASE("short series clamps the batch count") {
    std::vector<double> s = {1.0, 2.0, 3.0};
    CHECK(batch_means(s).batches == 3);
    CHECK(batch_means({}).batches == 0);
  }
  SUBCASE("alternating series averages out") {
    std::vector<double> s(1000);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i % 2 ? 1.0 : -1.0;
    const BatchStats st = batch_means(s);
    CHECK(std::abs(st.mean) <= 0.05);
  }
}

TEST_CASE("bench reports consistent parallel results") {
  Geometry g(16, Bc::Periodic);
  const ModelParams p{0.4, 0.5};
  const BenchReport r = bench_sweep(g, p, KernelKind::ReversiblePeriodic,
                                    {1, 2, 4}, 50);
  REQUIRE(r.entries.size() == 3);
  for (const BenchEntry& e : r.entries) {
    CHECK(e.identical_to_single);
    CHECK(e.seconds > 0.0);
    CHECK(e.site_updates_per_second > 0.0);
  }
}
