#include "ising/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ising/dynamics.hpp"

namespace ising {

namespace {

std::uint64_t state_count(const Geometry& g) {
  if (g.num_sites() > 16) {
    throw std::invalid_argument("state space too large for exact tables");
  }
  return std::uint64_t{1} << g.num_sites();
}

MeasureTable normalize(std::vector<double> logw) {
  MeasureTable t;
  const double shift = *std::max_element(logw.begin(), logw.end());
  t.p.resize(logw.size());
  double norm = 0;
  for (std::size_t a = 0; a < logw.size(); ++a) {
    t.p[a] = std::exp(logw[a] - shift);
    norm += t.p[a];
  }
  for (auto& v : t.p) v /= norm;
  t.logw = std::move(logw);
  return t;
}

}  // namespace

MeasureTable gibbs_measure(const Geometry& g, double J) {
  const std::uint64_t states = state_count(g);
  std::vector<double> logw(states);
  for (std::uint64_t a = 0; a < states; ++a) {
    logw[a] = -energy_single(g, J, config_from_index(g, a));
  }
  return normalize(std::move(logw));
}

MeasureTable pca_measure(const Geometry& g, const ModelParams& p,
                         KernelKind kind) {
  const std::uint64_t states = state_count(g);
  std::vector<double> logw(states);
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig s = config_from_index(g, a);
    // log Z_sigma modulo the sigma-independent e^{-+q|Lambda|} factor.
    logw[a] = -energy_single(g, p.J, s) + log_f_factor(g, p, kind, s);
  }
  return normalize(std::move(logw));
}

double tv_distance(const MeasureTable& a, const MeasureTable& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("measure tables index different spaces");
  }
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::abs(a.p[i] - b.p[i]);
  }
  return 0.5 * sum;
}

double factorization_residual(const Geometry& g, const ModelParams& p,
                              KernelKind kind) {
  if (g.num_sites() > 12) {
    throw std::invalid_argument("lattice too large for brute-force tau-sums");
  }
  const std::uint64_t states = std::uint64_t{1} << g.num_sites();
  // H^I carries -q sum(sigma tau), so its tau-sum factorizes with e^{+q|L|}
  // in front of w_G f; the reversible +2q-per-flip form has no constant.
  const double shift = kind == KernelKind::IrreversiblePeriodic
                           ? p.q() * g.num_sites()
                           : 0.0;

  double worst = 0;
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig sigma = config_from_index(g, a);
    double brute = 0;
    for (std::uint64_t b = 0; b < states; ++b) {
      brute += std::exp(-energy_pair(g, p, kind, sigma,
                                     config_from_index(g, b)));
    }
    const double closed = std::exp(shift - energy_single(g, p.J, sigma) +
                                   log_f_factor(g, p, kind, sigma));
    worst = std::max(worst, std::abs(brute - closed) / closed);
  }
  return worst;
}

double delta_functional(const Geometry& g, const ModelParams& p,
                        KernelKind kind) {
  const std::uint64_t states = state_count(g);
  const MeasureTable gibbs = gibbs_measure(g, p.J);
  // With u = f - 1: Delta = (E[u^2] - E[u]^2) / (1 + E[u])^2.
  double eu = 0, eu2 = 0;
  for (std::uint64_t a = 0; a < states; ++a) {
    const double u =
        f_factor_minus_one(g, p, kind, config_from_index(g, a));
    eu += gibbs.p[a] * u;
    eu2 += gibbs.p[a] * u * u;
  }
  const double var = eu2 - eu * eu;
  return var / ((1.0 + eu) * (1.0 + eu));
}

double first_order_coefficient(const Geometry& g, double J, KernelKind kind) {
  const std::uint64_t states = state_count(g);
  const MeasureTable gibbs = gibbs_measure(g, J);
  double c1 = 0;
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig s = config_from_index(g, a);
    double sum_phi = 0;
    for (int i = 0; i < g.num_sites(); ++i) {
      sum_phi += phi(g, J, kind, s, i);
    }
    c1 += gibbs.p[a] * sum_phi;
  }
  return c1;
}

double pi_f_minus_one(const Geometry& g, const ModelParams& p,
                      KernelKind kind) {
  const std::uint64_t states = state_count(g);
  const MeasureTable gibbs = gibbs_measure(g, p.J);
  double eu = 0;
  for (std::uint64_t a = 0; a < states; ++a) {
    eu += gibbs.p[a] *
          f_factor_minus_one(g, p, kind, config_from_index(g, a));
  }
  return eu;
}

double first_order_residual(const Geometry& g, const ModelParams& p,
                            KernelKind kind) {
  return pi_f_minus_one(g, p, kind) -
         p.delta * first_order_coefficient(g, p.J, kind);
}

}  // namespace ising
