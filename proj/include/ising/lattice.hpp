#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace ising {

enum class Bc { Plus, Periodic };

enum class Dir : int { Up = 0, Right = 1, Down = 2, Left = 3 };

// Marker for a neighbor slot pointing outside Lambda (Plus b.c. only).
constexpr int kExternal = -1;

// A primal nearest-neighbor bond, owned by `site` and pointing toward `dir`.
// Each bond of the edge set appears exactly once in Geometry::bonds().
struct Bond {
  int site;
  Dir dir;
};

// Unit segment of the dual lattice, perpendicular to a primal bond.
// Coordinates are doubled so that half-integer midpoints stay integral:
// a point (r, c) of the primal lattice has doubled coordinates (2r, 2c).
struct DualEdge {
  int row2;
  int col2;
  bool vertical;  // vertical dual segment <=> horizontal primal bond

  friend bool operator==(const DualEdge& a, const DualEdge& b) {
    return a.row2 == b.row2 && a.col2 == b.col2 && a.vertical == b.vertical;
  }
};

// L x L square lattice with either plus (fixed +1 outside) or periodic
// boundary conditions. Immutable after construction.
class Geometry {
 public:
  Geometry(int L, Bc bc);

  int side() const { return L_; }
  Bc bc() const { return bc_; }
  int num_sites() const { return L_ * L_; }

  int site_at(int r, int c) const { return r * L_ + c; }
  int row_of(int i) const { return i / L_; }
  int col_of(int i) const { return i % L_; }

  // Neighbor site per direction (Up, Right, Down, Left); kExternal when the
  // neighbor lies in the external boundary (Plus b.c.).
  const std::array<int, 4>& neighbors(int i) const { return neighbors_[i]; }

  // Number of external contacts of site i: 0 interior, 1 edge, 2 corner
  // (always 0 for Periodic).
  int external_contacts(int i) const { return external_contacts_[i]; }

  // Full edge set: B_Lambda^per (Periodic) or B_Lambda^+ restricted to bonds
  // with at least one endpoint in Lambda (Plus).
  const std::vector<Bond>& bonds() const { return bonds_; }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }

  // Partner endpoint of a bond; kExternal for a contact bond.
  int bond_partner(const Bond& b) const;

  // Bond index incident to site i in each direction (every site has exactly
  // four incident bonds, contact bonds included for Plus).
  const std::array<int, 4>& incident_bonds(int i) const {
    return incident_bonds_[i];
  }

  DualEdge dual_edge(int bond_index) const;
  // Inverse of dual_edge; throws std::out_of_range if no bond maps there.
  int bond_from_dual(const DualEdge& e) const;

  // Endpoints of a dual segment in doubled coordinates, reduced mod 2L for
  // Periodic so the seam-crossing segments land on torus vertices.
  std::array<std::pair<int, int>, 2> dual_endpoints(const DualEdge& e) const;

 private:
  int L_;
  Bc bc_;
  std::vector<std::array<int, 4>> neighbors_;
  std::vector<int> external_contacts_;
  std::vector<Bond> bonds_;
  std::vector<std::array<int, 4>> incident_bonds_;
  std::vector<DualEdge> duals_;
  std::map<std::tuple<int, int, bool>, int> dual_index_;
};

}  // namespace ising
