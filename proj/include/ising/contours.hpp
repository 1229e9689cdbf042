#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ising/hamiltonian.hpp"

namespace ising {

// A set of dual-lattice unit segments, stored as indices into the
// geometry's bond list, together with its vertex-class counts:
//   vertex_classes[s-1] = #{ i in Lambda : exactly s incident bonds in Gamma }
//   directed_classes[s-1] = the same counting only the down/left bonds of
//   each site (the classes entering the irreversible weights).
struct ContourSet {
  std::vector<int> edges;
  std::array<int, 4> vertex_classes{};
  std::array<int, 2> directed_classes{};

  int size() const { return static_cast<int>(edges.size()); }
};

enum class Connectivity { PConnected, Standard };

// Dual segments of all disagreeing bonds (external spins +1 for Plus).
ContourSet extract_contour(const Geometry& g, const SpinConfig& sigma);

// Builds a ContourSet (with class counts) from an arbitrary edge subset.
ContourSet contour_from_edges(const Geometry& g, std::vector<int> edges);

// Every dual vertex touched by gamma has even degree.
bool all_degrees_even(const Geometry& g, const ContourSet& gamma);

// |J sum_bonds sigma_i sigma_j - (J|B| - 2J|Gamma|)|; exact zero since the
// bond counts are integers.
double energy_contour_identity(const Geometry& g, double J,
                               const SpinConfig& sigma);

// Partition of Gamma into components. PConnected joins segments sharing a
// dual vertex or parallel at Euclidean midpoint distance exactly 1;
// Standard joins only segments sharing a dual vertex.
std::vector<ContourSet> decompose(const Geometry& g, const ContourSet& gamma,
                                  Connectivity connectivity);

// xi_k(Gamma): product over vertex classes of the normalized (1 + delta e^*)
// factors; the irreversible kind uses the two directed classes.
double xi_weight(const ContourSet& gamma, int k, double J, double delta,
                 KernelKind kind);

// rho_k(gamma) = xi_k(gamma) e^{-2J|gamma|}.
double activity(const ContourSet& gamma, int k, double J, double delta,
                KernelKind kind);

// A(J,delta) entering the activity bound rho_k(gamma) <= A^{|gamma|}:
// exponent 4 for the reversible kinds, 2 for the irreversible one.
double activity_bound_base(double J, double delta, KernelKind kind);

// Contour-gas partition function Xi^{(k)}(J,delta). Plus: sum over all even
// subgraphs of the dual region. Periodic: sum over the sigma-images (each
// image once). L <= 3.
double contour_partition(const Geometry& g, int k, double J, double delta,
                         KernelKind kind);

// Number of even subgraphs of the Plus dual region (= 2^{L^2}).
std::uint64_t even_subgraph_count(const Geometry& g);

struct KpReport {
  double J = 0;
  double delta = 0;
  double a = 1.0;          // weight a(gamma) = a|gamma|
  double A = 0;            // activity bound base
  double series_ratio = 0; // e 3^{3/2} A (reversible) or 3 e A (irreversible)
  double series_bound = 0; // ratio^4 / (1 - ratio), the anchored-sum bound
  double series_target = 0;
  bool satisfied = false;
  double a_threshold = 0;  // 1 / (2 e 3^{3/2}); A below it is sufficient
  bool a_below_threshold = false;
  bool radius_window = false;  // e^{2J} > 4 e 3^{3/2} and |delta| < e^{-4J}/12
  double truncated_sum = 0;    // sum_{4 <= n <= cutoff} ratio^n
  double tail_bound = 0;       // geometric tail past the cutoff
  int cutoff = 0;
};

KpReport kp_check(double J, double delta, KernelKind kind, int cutoff = 64);

// J value at which the delta=0 radius window opens: ln(4 e 3^{3/2}) / 2.
double radius_window_threshold();

}  // namespace ising
