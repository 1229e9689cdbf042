#pragma once

#include <cstdint>

#include "ising/hamiltonian.hpp"

namespace ising {

// P(tau_i = s | sigma) = e^{x s} / (2 cosh x) with x = h_i(sigma) + sigma_i q,
// evaluated through the stable logistic form 1 / (1 + e^{-2 x s}).
double local_update_prob(const Geometry& g, const ModelParams& p,
                         KernelKind kind, const SpinConfig& sigma, int i,
                         int s);

// Probability that site i flips in one parallel step.
double flip_probability(const Geometry& g, const ModelParams& p,
                        KernelKind kind, const SpinConfig& sigma, int i);

// Product-form transition probability prod_i P(tau_i | sigma).
double transition_prob(const Geometry& g, const ModelParams& p,
                       KernelKind kind, const SpinConfig& sigma,
                       const SpinConfig& tau);

// Boltzmann form e^{-H(sigma,tau)} / Z_sigma; agrees with the product form.
double transition_prob_boltzmann(const Geometry& g, const ModelParams& p,
                                 KernelKind kind, const SpinConfig& sigma,
                                 const SpinConfig& tau);

// Per-configuration normalizer Z_sigma = sum_tau e^{-H(sigma,tau)}, via the
// closed single-site product; log-domain primary.
double log_z_sigma(const Geometry& g, const ModelParams& p, KernelKind kind,
                   const SpinConfig& sigma);
double z_sigma(const Geometry& g, const ModelParams& p, KernelKind kind,
               const SpinConfig& sigma);

// One fully parallel step: every tau_i drawn independently from the frozen
// input sigma. Site draws come from the counter-based stream, so the result
// is independent of `workers`.
SpinConfig sweep(const Geometry& g, const ModelParams& p, KernelKind kind,
                 const SpinConfig& sigma, std::uint64_t seed,
                 std::uint64_t sweep_index, int workers = 1);

struct BalanceReport {
  double max_residual = 0;
  // Witness pair for the largest |pi(s)P(s,t) - pi(t)P(t,s)|.
  std::uint64_t sigma_index = 0;
  std::uint64_t tau_index = 0;
};

// Exhaustive detailed-balance check against pi ~ Z_sigma (L <= 3).
BalanceReport detailed_balance_residual(const Geometry& g,
                                        const ModelParams& p,
                                        KernelKind kind);

// |sum_tau e^{-H^I(sigma,tau)} - sum_tau e^{-H^I(tau,sigma)}| / Z^I_sigma
// by brute-force tau-sums (IrreversiblePeriodic, L <= 3).
double dynamical_balance_residual(const Geometry& g, const ModelParams& p,
                                  const SpinConfig& sigma);

}  // namespace ising
