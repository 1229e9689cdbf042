#include "ising/contours.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ising {

namespace {

constexpr double kEuler = 2.718281828459045235360287;

void fill_classes(const Geometry& g, ContourSet& c) {
  std::vector<char> in_set(g.num_bonds(), 0);
  for (int e : c.edges) in_set[e] = 1;
  c.vertex_classes.fill(0);
  c.directed_classes.fill(0);
  for (int i = 0; i < g.num_sites(); ++i) {
    const auto& inc = g.incident_bonds(i);
    int total = 0, directed = 0;
    for (int d = 0; d < 4; ++d) {
      if (inc[d] >= 0 && in_set[inc[d]]) {
        ++total;
        if (d == static_cast<int>(Dir::Down) ||
            d == static_cast<int>(Dir::Left)) {
          ++directed;
        }
      }
    }
    if (total > 0) ++c.vertex_classes[total - 1];
    if (directed > 0) ++c.directed_classes[directed - 1];
  }
}

int torus_delta(int a, int b, int mod) {
  int d = std::abs(a - b) % mod;
  return std::min(d, mod - d);
}

}  // namespace

ContourSet contour_from_edges(const Geometry& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  ContourSet c;
  c.edges = std::move(edges);
  fill_classes(g, c);
  return c;
}

ContourSet extract_contour(const Geometry& g, const SpinConfig& sigma) {
  std::vector<int> edges;
  const auto& bonds = g.bonds();
  for (int b = 0; b < g.num_bonds(); ++b) {
    const int j = g.bond_partner(bonds[b]);
    const int sj = (j == kExternal) ? 1 : sigma[j];
    if (sigma[bonds[b].site] * sj < 0) edges.push_back(b);
  }
  return contour_from_edges(g, std::move(edges));
}

bool all_degrees_even(const Geometry& g, const ContourSet& gamma) {
  std::map<std::pair<int, int>, int> degree;
  for (int e : gamma.edges) {
    for (const auto& v : g.dual_endpoints(g.dual_edge(e))) {
      ++degree[v];
    }
  }
  return std::all_of(degree.begin(), degree.end(),
                     [](const auto& kv) { return kv.second % 2 == 0; });
}

double energy_contour_identity(const Geometry& g, double J,
                               const SpinConfig& sigma) {
  long long bond_sum = 0;
  long long disagreeing = 0;
  for (const Bond& b : g.bonds()) {
    const int j = g.bond_partner(b);
    const int sj = (j == kExternal) ? 1 : sigma[j];
    const int prod = sigma[b.site] * sj;
    bond_sum += prod;
    if (prod < 0) ++disagreeing;
  }
  const long long rhs = g.num_bonds() - 2 * disagreeing;
  return J * static_cast<double>(std::llabs(bond_sum - rhs));
}

std::vector<ContourSet> decompose(const Geometry& g, const ContourSet& gamma,
                                  Connectivity connectivity) {
  const int n = gamma.size();
  std::vector<DualEdge> duals(n);
  std::vector<std::array<std::pair<int, int>, 2>> ends(n);
  for (int a = 0; a < n; ++a) {
    duals[a] = g.dual_edge(gamma.edges[a]);
    ends[a] = g.dual_endpoints(duals[a]);
  }

  const bool periodic = g.bc() == Bc::Periodic;
  const int mod = 2 * g.side();
  auto connected = [&](int a, int b) {
    for (const auto& u : ends[a]) {
      for (const auto& v : ends[b]) {
        if (u == v) return true;
      }
    }
    if (connectivity != Connectivity::PConnected) return false;
    if (duals[a].vertical != duals[b].vertical) return false;
    // Parallel segments at Euclidean midpoint distance exactly 1
    // (distance 2 in doubled coordinates).
    int dr, dc;
    if (periodic) {
      dr = torus_delta(duals[a].row2, duals[b].row2, mod);
      dc = torus_delta(duals[a].col2, duals[b].col2, mod);
    } else {
      dr = std::abs(duals[a].row2 - duals[b].row2);
      dc = std::abs(duals[a].col2 - duals[b].col2);
    }
    return dr * dr + dc * dc == 4;
  };

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (connected(a, b)) parent[find(a)] = find(b);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) {
    groups[find(a)].push_back(gamma.edges[a]);
  }
  std::vector<ContourSet> components;
  components.reserve(groups.size());
  for (auto& [root, edges] : groups) {
    components.push_back(contour_from_edges(g, std::move(edges)));
  }
  return components;
}

double xi_weight(const ContourSet& gamma, int k, double J, double delta,
                 KernelKind kind) {
  const double denom = 1.0 + delta * std::exp(-4.0 * J);
  if (!(denom > 0)) {
    throw std::domain_error("nonpositive xi denominator");
  }
  double xi = 1.0;
  if (kind == KernelKind::IrreversiblePeriodic) {
    const double num[2] = {1.0 + delta, 1.0 + delta * std::exp(4.0 * J)};
    for (int s = 0; s < 2; ++s) {
      xi *= std::pow(num[s] / denom, k * gamma.directed_classes[s]);
    }
  } else {
    for (int s = 1; s <= 4; ++s) {
      const double num = 1.0 + delta * std::exp((2.0 * s - 4.0) * J);
      xi *= std::pow(num / denom, k * gamma.vertex_classes[s - 1]);
    }
  }
  return xi;
}

double activity(const ContourSet& gamma, int k, double J, double delta,
                KernelKind kind) {
  return xi_weight(gamma, k, J, delta, kind) *
         std::exp(-2.0 * J * gamma.size());
}

double activity_bound_base(double J, double delta, KernelKind kind) {
  const double ad = std::abs(delta);
  const double denom = 1.0 - ad * std::exp(-4.0 * J);
  if (!(denom > 0)) {
    throw std::domain_error("activity bound requires |delta| < e^{4J}");
  }
  const double ratio = (1.0 + ad * std::exp(4.0 * J)) / denom;
  const int power = kind == KernelKind::IrreversiblePeriodic ? 2 : 4;
  return std::exp(-2.0 * J) * std::pow(ratio, power);
}

std::uint64_t even_subgraph_count(const Geometry& g) {
  if (g.bc() != Bc::Plus) {
    throw std::invalid_argument("even-subgraph count defined for plus b.c.");
  }
  std::map<std::pair<int, int>, int> vertex_id;
  for (int b = 0; b < g.num_bonds(); ++b) {
    for (const auto& v : g.dual_endpoints(g.dual_edge(b))) {
      vertex_id.emplace(v, static_cast<int>(vertex_id.size()));
    }
  }
  // Connected dual grid: cycle-space dimension |E| - |V| + 1.
  const int dim = g.num_bonds() - static_cast<int>(vertex_id.size()) + 1;
  return std::uint64_t{1} << dim;
}

namespace {

// Cycle-space basis of the plus-b.c. dual grid as edge bitmasks.
std::vector<std::uint64_t> dual_cycle_basis(const Geometry& g) {
  if (g.num_bonds() > 64) {
    throw std::invalid_argument("dual region too large for enumeration");
  }
  std::map<std::pair<int, int>, int> vertex_id;
  std::vector<std::array<int, 2>> edge_ends(g.num_bonds());
  for (int b = 0; b < g.num_bonds(); ++b) {
    const auto ends = g.dual_endpoints(g.dual_edge(b));
    for (int s = 0; s < 2; ++s) {
      auto [it, _] = vertex_id.emplace(ends[s], static_cast<int>(vertex_id.size()));
      edge_ends[b][s] = it->second;
    }
  }
  const int nv = static_cast<int>(vertex_id.size());

  // BFS spanning tree; path_mask[v] = tree path from the root to v.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (other, edge)
  for (int b = 0; b < g.num_bonds(); ++b) {
    adj[edge_ends[b][0]].push_back({edge_ends[b][1], b});
    adj[edge_ends[b][1]].push_back({edge_ends[b][0], b});
  }
  std::vector<char> seen(nv, 0);
  std::vector<char> tree_edge(g.num_bonds(), 0);
  std::vector<std::uint64_t> path_mask(nv, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (auto [w, e] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        tree_edge[e] = 1;
        path_mask[w] = path_mask[v] ^ (std::uint64_t{1} << e);
        queue.push_back(w);
      }
    }
  }

  std::vector<std::uint64_t> basis;
  for (int b = 0; b < g.num_bonds(); ++b) {
    if (!tree_edge[b]) {
      basis.push_back(path_mask[edge_ends[b][0]] ^ path_mask[edge_ends[b][1]] ^
                      (std::uint64_t{1} << b));
    }
  }
  return basis;
}

}  // namespace

double contour_partition(const Geometry& g, int k, double J, double delta,
                         KernelKind kind) {
  if (g.num_sites() > 12) {
    throw std::invalid_argument("lattice too large for contour enumeration");
  }
  double xi_sum = 0;
  if (g.bc() == Bc::Plus) {
    const auto basis = dual_cycle_basis(g);
    const std::uint64_t combos = std::uint64_t{1} << basis.size();
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((c >> b) & 1) mask ^= basis[b];
      }
      std::vector<int> edges;
      for (int e = 0; e < g.num_bonds(); ++e) {
        if ((mask >> e) & 1) edges.push_back(e);
      }
      const ContourSet gamma = contour_from_edges(g, std::move(edges));
      xi_sum += std::exp(-2.0 * J * gamma.size()) *
                xi_weight(gamma, k, J, delta, kind);
    }
  } else {
    // sigma-images only: not every even subgraph of the dual torus has a
    // spin preimage (windings must cancel). Fixing sigma at site 0 to +1
    // visits each image exactly once.
    const std::uint64_t half = std::uint64_t{1} << (g.num_sites() - 1);
    for (std::uint64_t c = 0; c < half; ++c) {
      const SpinConfig sigma = config_from_index(g, c << 1);
      const ContourSet gamma = extract_contour(g, sigma);
      xi_sum += std::exp(-2.0 * J * gamma.size()) *
                xi_weight(gamma, k, J, delta, kind);
    }
  }
  return xi_sum;
}

double radius_window_threshold() {
  return 0.5 * std::log(4.0 * kEuler * std::pow(3.0, 1.5));
}

KpReport kp_check(double J, double delta, KernelKind kind, int cutoff) {
  KpReport r;
  r.J = J;
  r.delta = delta;
  r.cutoff = cutoff;
  r.A = activity_bound_base(J, delta, kind);
  const bool irrev = kind == KernelKind::IrreversiblePeriodic;
  // Anchoring factor: e 3^{3/2} per Eulerian-circuit step count for
  // p-connected contours, 3 e for standard contours.
  const double anchor = irrev ? 3.0 * kEuler : kEuler * std::pow(3.0, 1.5);
  r.series_ratio = anchor * r.A;
  r.series_target = irrev ? 1.0 : 1.0 / 3.0;
  if (r.series_ratio < 1.0) {
    r.series_bound = std::pow(r.series_ratio, 4) / (1.0 - r.series_ratio);
    r.satisfied = r.series_bound <= r.series_target;
  } else {
    r.series_bound = std::numeric_limits<double>::infinity();
    r.satisfied = false;
  }
  r.a_threshold = 1.0 / (2.0 * kEuler * std::pow(3.0, 1.5));
  r.a_below_threshold = r.A < r.a_threshold;
  r.radius_window = std::exp(2.0 * J) > 4.0 * kEuler * std::pow(3.0, 1.5) &&
                    std::abs(delta) < std::exp(-4.0 * J) / 12.0;
  double term = std::pow(r.series_ratio, 4);
  for (int n = 4; n <= cutoff; ++n) {
    r.truncated_sum += term;
    term *= r.series_ratio;
  }
  r.tail_bound = r.series_ratio < 1.0
                     ? term / (1.0 - r.series_ratio)
                     : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace ising
