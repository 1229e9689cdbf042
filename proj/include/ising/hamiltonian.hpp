#pragma once

#include <cstdint>
#include <vector>

#include "ising/lattice.hpp"

namespace ising {

enum class KernelKind { ReversiblePlus, ReversiblePeriodic, IrreversiblePeriodic };

// Boundary condition a kernel kind lives on.
Bc bc_of(KernelKind kind);
bool is_reversible(KernelKind kind);
const char* kind_name(KernelKind kind);

// Dynamics parameters. delta is primary; the self-coupling q = -ln(delta)/2
// is derived. delta = 0 is the frozen-dynamics sentinel (q = +inf).
struct ModelParams {
  double J;
  double delta;

  double q() const;
  static ModelParams from_q(double J, double q);
};

using Spin = std::int8_t;
using SpinConfig = std::vector<Spin>;

SpinConfig all_plus(const Geometry& g);
// Canonical enumeration: bit i of idx set <=> spin at site i is -1.
SpinConfig config_from_index(const Geometry& g, std::uint64_t idx);
std::uint64_t config_index(const SpinConfig& s);

// H^per or H^+ depending on the geometry; external spins fixed to +1.
double energy_single(const Geometry& g, double J, const SpinConfig& sigma);

// Pair Hamiltonians H^per(s,t), H^+(s,t), H^I(s,t). Exact at delta=0
// (the q-terms are resolved before multiplying by q = +inf).
double energy_pair(const Geometry& g, const ModelParams& p, KernelKind kind,
                   const SpinConfig& sigma, const SpinConfig& tau);

// h_i^+, h_i^per or h_i^I.
double local_field(const Geometry& g, double J, KernelKind kind,
                   const SpinConfig& sigma, int i);

// Boundary field term: partial_i = (J/2) * external contact count.
double boundary_term(const Geometry& g, double J, int i);
// G(sigma) = sum_i partial_i sigma_i (zero for periodic kinds).
double boundary_sum(const Geometry& g, double J, KernelKind kind,
                    const SpinConfig& sigma);

// Residual of the single-site decomposition of the pair Hamiltonian:
// reversible kinds check against -sum_i (h_i + sigma_i q) tau_i - G + q|L|,
// the irreversible kind checks its two written forms against each other.
double decomposition_check(const Geometry& g, const ModelParams& p,
                           KernelKind kind, const SpinConfig& sigma,
                           const SpinConfig& tau);

// phi_i = exp(-2 h_i(sigma) sigma_i).
double phi(const Geometry& g, double J, KernelKind kind,
           const SpinConfig& sigma, int i);

// f(sigma) = prod_i (1 + delta phi_i) and its log/expm1 companions.
double f_factor(const Geometry& g, const ModelParams& p, KernelKind kind,
                const SpinConfig& sigma);
double log_f_factor(const Geometry& g, const ModelParams& p, KernelKind kind,
                    const SpinConfig& sigma);
// f(sigma) - 1, computed without cancellation (needed for the first-order
// expansion checks where f - 1 = O(delta)).
double f_factor_minus_one(const Geometry& g, const ModelParams& p,
                          KernelKind kind, const SpinConfig& sigma);

}  // namespace ising
