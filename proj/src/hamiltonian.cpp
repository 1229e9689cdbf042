#include "ising/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ising {

namespace {

// log(1 + e^t) without overflow.
double log1p_exp(double t) {
  return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

void check_kind(const Geometry& g, KernelKind kind) {
  if (bc_of(kind) != g.bc()) {
    throw std::invalid_argument("kernel kind does not match geometry b.c.");
  }
}

}  // namespace

Bc bc_of(KernelKind kind) {
  return kind == KernelKind::ReversiblePlus ? Bc::Plus : Bc::Periodic;
}

bool is_reversible(KernelKind kind) {
  return kind != KernelKind::IrreversiblePeriodic;
}

const char* kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::ReversiblePlus: return "rev-plus";
    case KernelKind::ReversiblePeriodic: return "rev-per";
    case KernelKind::IrreversiblePeriodic: return "irrev-per";
  }
  return "?";
}

double ModelParams::q() const {
  if (delta < 0 || delta >= 1) {
    throw std::invalid_argument("delta must lie in [0, 1)");
  }
  if (delta == 0) return std::numeric_limits<double>::infinity();
  return -0.5 * std::log(delta);
}

ModelParams ModelParams::from_q(double J, double q) {
  if (!(q > 0)) throw std::invalid_argument("q must be positive");
  return ModelParams{J, std::exp(-2.0 * q)};
}

SpinConfig all_plus(const Geometry& g) {
  return SpinConfig(g.num_sites(), Spin{1});
}

SpinConfig config_from_index(const Geometry& g, std::uint64_t idx) {
  SpinConfig s(g.num_sites());
  for (int i = 0; i < g.num_sites(); ++i) {
    s[i] = (idx >> i) & 1 ? Spin{-1} : Spin{1};
  }
  return s;
}

std::uint64_t config_index(const SpinConfig& s) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) idx |= std::uint64_t{1} << i;
  }
  return idx;
}

double energy_single(const Geometry& g, double J, const SpinConfig& sigma) {
  long long sum = 0;
  for (const Bond& b : g.bonds()) {
    const int j = g.bond_partner(b);
    const int sj = (j == kExternal) ? 1 : sigma[j];
    sum += sigma[b.site] * sj;
  }
  return -J * static_cast<double>(sum);
}

double energy_pair(const Geometry& g, const ModelParams& p, KernelKind kind,
                   const SpinConfig& sigma, const SpinConfig& tau) {
  check_kind(g, kind);
  const int n = g.num_sites();
  const double q = p.q();
  if (kind == KernelKind::IrreversiblePeriodic) {
    long long cross = 0;  // sum_i sigma_i (tau_up + tau_right)
    long long diag = 0;   // sum_i sigma_i tau_i
    for (int i = 0; i < n; ++i) {
      const auto& nb = g.neighbors(i);
      cross += sigma[i] * (tau[nb[static_cast<int>(Dir::Up)]] +
                           tau[nb[static_cast<int>(Dir::Right)]]);
      diag += sigma[i] * tau[i];
    }
    double qterm = 0;
    if (diag != 0) qterm = -q * static_cast<double>(diag);
    return -p.J * static_cast<double>(cross) + qterm;
  }

  long long cross = 0;     // sum over in-lattice bonds of sigma_i tau_j (both orders)
  long long boundary = 0;  // sum over contact slots of (sigma_i + tau_i)
  long long flips = 0;
  for (const Bond& b : g.bonds()) {
    const int j = g.bond_partner(b);
    if (j == kExternal) {
      boundary += sigma[b.site] + tau[b.site];
    } else {
      cross += sigma[b.site] * tau[j] + sigma[j] * tau[b.site];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (sigma[i] != tau[i]) ++flips;
  }
  double qterm = 0;
  if (flips != 0) qterm = 2.0 * q * static_cast<double>(flips);
  return -0.5 * p.J * static_cast<double>(cross) -
         0.5 * p.J * static_cast<double>(boundary) + qterm;
}

double local_field(const Geometry& g, double J, KernelKind kind,
                   const SpinConfig& sigma, int i) {
  check_kind(g, kind);
  const auto& nb = g.neighbors(i);
  if (kind == KernelKind::IrreversiblePeriodic) {
    return J * (sigma[nb[static_cast<int>(Dir::Down)]] +
                sigma[nb[static_cast<int>(Dir::Left)]]);
  }
  int sum = 0;
  for (int d = 0; d < 4; ++d) {
    if (nb[d] != kExternal) sum += sigma[nb[d]];
  }
  double h = 0.5 * J * sum;
  if (kind == KernelKind::ReversiblePlus) h += boundary_term(g, J, i);
  return h;
}

double boundary_term(const Geometry& g, double J, int i) {
  return 0.5 * J * g.external_contacts(i);
}

double boundary_sum(const Geometry& g, double J, KernelKind kind,
                    const SpinConfig& sigma) {
  if (kind != KernelKind::ReversiblePlus) return 0.0;
  double G = 0;
  for (int i = 0; i < g.num_sites(); ++i) {
    G += boundary_term(g, J, i) * sigma[i];
  }
  return G;
}

double decomposition_check(const Geometry& g, const ModelParams& p,
                           KernelKind kind, const SpinConfig& sigma,
                           const SpinConfig& tau) {
  check_kind(g, kind);
  const int n = g.num_sites();
  const double q = p.q();
  if (kind == KernelKind::IrreversiblePeriodic) {
    // Left-hand form of the display vs the right-hand one.
    double left = 0, right = 0;
    for (int i = 0; i < n; ++i) {
      const auto& nb = g.neighbors(i);
      left -= p.J * sigma[i] *
                  (tau[nb[static_cast<int>(Dir::Up)]] +
                   tau[nb[static_cast<int>(Dir::Right)]]) +
              q * sigma[i] * tau[i];
      right -= tau[i] * (local_field(g, p.J, kind, sigma, i) + q * sigma[i]);
    }
    return std::abs(left - right);
  }
  double rhs = q * n - boundary_sum(g, p.J, kind, sigma);
  for (int i = 0; i < n; ++i) {
    rhs -= (local_field(g, p.J, kind, sigma, i) + sigma[i] * q) * tau[i];
  }
  return std::abs(energy_pair(g, p, kind, sigma, tau) - rhs);
}

double phi(const Geometry& g, double J, KernelKind kind,
           const SpinConfig& sigma, int i) {
  return std::exp(-2.0 * local_field(g, J, kind, sigma, i) * sigma[i]);
}

double log_f_factor(const Geometry& g, const ModelParams& p, KernelKind kind,
                    const SpinConfig& sigma) {
  if (p.delta == 0) return 0.0;
  const double log_delta = std::log(p.delta);
  double acc = 0;
  for (int i = 0; i < g.num_sites(); ++i) {
    const double t =
        log_delta - 2.0 * local_field(g, p.J, kind, sigma, i) * sigma[i];
    acc += log1p_exp(t);
  }
  return acc;
}

double f_factor(const Geometry& g, const ModelParams& p, KernelKind kind,
                const SpinConfig& sigma) {
  return std::exp(log_f_factor(g, p, kind, sigma));
}

double f_factor_minus_one(const Geometry& g, const ModelParams& p,
                          KernelKind kind, const SpinConfig& sigma) {
  return std::expm1(log_f_factor(g, p, kind, sigma));
}

}  // namespace ising
