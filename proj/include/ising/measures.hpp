#pragma once

#include <vector>

#include "ising/hamiltonian.hpp"

namespace ising {

// Exact probability table over all 2^{L^2} configurations in canonical
// index order. Log-weights are retained alongside the normalized entries.
struct MeasureTable {
  std::vector<double> p;
  std::vector<double> logw;

  std::size_t size() const { return p.size(); }
};

// pi_G ~ e^{-H}; L <= 4.
MeasureTable gibbs_measure(const Geometry& g, double J);

// pi_PCA(sigma) = Z_sigma / sum Z_sigma, via the closed-form normalizer
// (the constant e^{-+q|Lambda|} cancels). L <= 4.
MeasureTable pca_measure(const Geometry& g, const ModelParams& p,
                         KernelKind kind);

double tv_distance(const MeasureTable& a, const MeasureTable& b);

// Max over sigma of the relative gap between the brute-force tau-sum
// sum_tau e^{-H(sigma,tau)} and the factorized e^{-+q|L|} w_G(sigma) f(sigma).
// Brute-force side limits this to L <= 3.
double factorization_residual(const Geometry& g, const ModelParams& p,
                              KernelKind kind);

// Delta(delta) = pi_G(f^2)/pi_G(f)^2 - 1, computed through u = f - 1 so the
// O(delta^2) variance survives in double precision.
double delta_functional(const Geometry& g, const ModelParams& p,
                        KernelKind kind);

// c_1 = sum_i pi_G(phi_i).
double first_order_coefficient(const Geometry& g, double J, KernelKind kind);

// pi_G(f) - 1 without cancellation.
double pi_f_minus_one(const Geometry& g, const ModelParams& p,
                      KernelKind kind);

// pi_G(f) - 1 - delta * c_1 (the O(delta^2) remainder of the expansion).
double first_order_residual(const Geometry& g, const ModelParams& p,
                            KernelKind kind);

}  // namespace ising
