#include "ising/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ising/rng.hpp"

namespace ising {

namespace {

void require_enumerable(const Geometry& g) {
  if (g.num_sites() > 12) {
    throw std::invalid_argument("lattice too large for enumeration");
  }
}

// Flip probability as a function of m = sigma_i * (2 h_i / J), an integer in
// [-4, 4] for every kind: p = delta / (delta + e^{J m}).
std::array<double, 9> flip_table(const ModelParams& p) {
  std::array<double, 9> t{};
  for (int m = -4; m <= 4; ++m) {
    t[m + 4] = p.delta / (p.delta + std::exp(p.J * m));
  }
  return t;
}

int field_index(const Geometry& g, double /*J*/, KernelKind kind,
                const SpinConfig& sigma, int i) {
  const auto& nb = g.neighbors(i);
  if (kind == KernelKind::IrreversiblePeriodic) {
    return 2 * sigma[i] *
           (sigma[nb[static_cast<int>(Dir::Down)]] +
            sigma[nb[static_cast<int>(Dir::Left)]]);
  }
  int sum = g.external_contacts(i);
  for (int d = 0; d < 4; ++d) {
    if (nb[d] != kExternal) sum += sigma[nb[d]];
  }
  return sigma[i] * sum;
}

}  // namespace

double local_update_prob(const Geometry& g, const ModelParams& p,
                         KernelKind kind, const SpinConfig& sigma, int i,
                         int s) {
  if (p.delta == 0) {
    return s == sigma[i] ? 1.0 : 0.0;
  }
  const double x = local_field(g, p.J, kind, sigma, i) + sigma[i] * p.q();
  return 1.0 / (1.0 + std::exp(-2.0 * x * s));
}

double flip_probability(const Geometry& g, const ModelParams& p,
                        KernelKind kind, const SpinConfig& sigma, int i) {
  return local_update_prob(g, p, kind, sigma, i, -sigma[i]);
}

double transition_prob(const Geometry& g, const ModelParams& p,
                       KernelKind kind, const SpinConfig& sigma,
                       const SpinConfig& tau) {
  double prob = 1.0;
  for (int i = 0; i < g.num_sites(); ++i) {
    prob *= local_update_prob(g, p, kind, sigma, i, tau[i]);
  }
  return prob;
}

double transition_prob_boltzmann(const Geometry& g, const ModelParams& p,
                                 KernelKind kind, const SpinConfig& sigma,
                                 const SpinConfig& tau) {
  if (p.delta == 0) {
    return sigma == tau ? 1.0 : 0.0;
  }
  return std::exp(-energy_pair(g, p, kind, sigma, tau) -
                  log_z_sigma(g, p, kind, sigma));
}

double log_z_sigma(const Geometry& g, const ModelParams& p, KernelKind kind,
                   const SpinConfig& sigma) {
  // The reversible pair Hamiltonian carries +2q per flip, so its tau-sum
  // factorizes as w_G f with no constant in front; the irreversible one
  // keeps -q sum(sigma tau) and picks up e^{+q|Lambda|}.
  if (kind == KernelKind::IrreversiblePeriodic) {
    return p.q() * g.num_sites() - energy_single(g, p.J, sigma) +
           log_f_factor(g, p, kind, sigma);
  }
  return -energy_single(g, p.J, sigma) + log_f_factor(g, p, kind, sigma);
}

double z_sigma(const Geometry& g, const ModelParams& p, KernelKind kind,
               const SpinConfig& sigma) {
  return std::exp(log_z_sigma(g, p, kind, sigma));
}

SpinConfig sweep(const Geometry& g, const ModelParams& p, KernelKind kind,
                 const SpinConfig& sigma, std::uint64_t seed,
                 std::uint64_t sweep_index, int workers) {
  const int n = g.num_sites();
  SpinConfig tau(n);
  const auto table = flip_table(p);

  auto update_range = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double u =
          rng::uniform(seed, rng::kStreamPcaSite, sweep_index, i);
      const int m = field_index(g, p.J, kind, sigma, i);
      tau[i] = u < table[m + 4] ? Spin(-sigma[i]) : sigma[i];
    }
  };

  if (workers <= 1) {
    update_range(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int lo = w * chunk;
      const int hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(update_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return tau;
}

BalanceReport detailed_balance_residual(const Geometry& g,
                                        const ModelParams& p,
                                        KernelKind kind) {
  require_enumerable(g);
  const int n = g.num_sites();
  const std::uint64_t states = std::uint64_t{1} << n;

  // Unnormalized stationary weights and per-site update probabilities.
  std::vector<double> logw(states);
  std::vector<double> p_plus(states * n);
  double max_logw = -std::numeric_limits<double>::infinity();
  for (std::uint64_t a = 0; a < states; ++a) {
    const SpinConfig s = config_from_index(g, a);
    logw[a] = log_z_sigma(g, p, kind, s);
    max_logw = std::max(max_logw, logw[a]);
    for (int i = 0; i < n; ++i) {
      p_plus[a * n + i] = local_update_prob(g, p, kind, s, i, +1);
    }
  }
  double norm = 0;
  std::vector<double> pi(states);
  for (std::uint64_t a = 0; a < states; ++a) {
    pi[a] = std::exp(logw[a] - max_logw);
    norm += pi[a];
  }
  for (auto& v : pi) v /= norm;

  auto kernel = [&](std::uint64_t a, std::uint64_t b) {
    double prob = 1.0;
    for (int i = 0; i < n; ++i) {
      const double pp = p_plus[a * n + i];
      prob *= (b >> i) & 1 ? 1.0 - pp : pp;
    }
    return prob;
  };

  BalanceReport report;
  for (std::uint64_t a = 0; a < states; ++a) {
    for (std::uint64_t b = a + 1; b < states; ++b) {
      const double res = std::abs(pi[a] * kernel(a, b) - pi[b] * kernel(b, a));
      if (res > report.max_residual) {
        report.max_residual = res;
        report.sigma_index = a;
        report.tau_index = b;
      }
    }
  }
  return report;
}

double dynamical_balance_residual(const Geometry& g, const ModelParams& p,
                                  const SpinConfig& sigma) {
  require_enumerable(g);
  const int n = g.num_sites();
  const std::uint64_t states = std::uint64_t{1} << n;
  const KernelKind kind = KernelKind::IrreversiblePeriodic;
  double forward = 0, backward = 0;
  for (std::uint64_t b = 0; b < states; ++b) {
    const SpinConfig tau = config_from_index(g, b);
    forward += std::exp(-energy_pair(g, p, kind, sigma, tau));
    backward += std::exp(-energy_pair(g, p, kind, tau, sigma));
  }
  return std::abs(forward - backward) / forward;
}

}  // namespace ising
