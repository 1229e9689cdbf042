#include "ising/lattice.hpp"

#include <stdexcept>

namespace ising {

namespace {

int wrap(int x, int L) { return ((x % L) + L) % L; }

}  // namespace

Geometry::Geometry(int L, Bc bc) : L_(L), bc_(bc) {
  if (bc == Bc::Plus && L < 2) {
    throw std::invalid_argument("plus b.c. requires L >= 2");
  }
  if (bc == Bc::Periodic && L < 3) {
    // At L=2 the wrap bonds coincide with the nearest-neighbor bonds,
    // doubling every edge of the torus.
    throw std::invalid_argument("periodic b.c. requires L >= 3");
  }

  const int n = L * L;
  neighbors_.resize(n);
  external_contacts_.assign(n, 0);
  incident_bonds_.resize(n);
  for (int i = 0; i < n; ++i) incident_bonds_[i].fill(-1);

  // Direction offsets in (row, col); Up is row-1.
  constexpr int dr[4] = {-1, 0, 1, 0};
  constexpr int dc[4] = {0, 1, 0, -1};

  for (int i = 0; i < n; ++i) {
    const int r = row_of(i), c = col_of(i);
    for (int d = 0; d < 4; ++d) {
      const int rr = r + dr[d], cc = c + dc[d];
      if (bc == Bc::Periodic) {
        neighbors_[i][d] = site_at(wrap(rr, L), wrap(cc, L));
      } else if (rr < 0 || rr >= L || cc < 0 || cc >= L) {
        neighbors_[i][d] = kExternal;
        ++external_contacts_[i];
      } else {
        neighbors_[i][d] = site_at(rr, cc);
      }
    }
  }

  // Edge set. Right/Down bonds cover each in-lattice (or torus) bond once;
  // Plus additionally owns one contact bond per external slot.
  auto add_bond = [&](int site, Dir dir) {
    const int idx = static_cast<int>(bonds_.size());
    bonds_.push_back(Bond{site, dir});
    incident_bonds_[site][static_cast<int>(dir)] = idx;
    const int j = neighbors_[site][static_cast<int>(dir)];
    if (j != kExternal) {
      const int opposite = (static_cast<int>(dir) + 2) % 4;
      incident_bonds_[j][opposite] = idx;
    }
  };

  for (int i = 0; i < n; ++i) {
    const int r = row_of(i), c = col_of(i);
    if (bc == Bc::Periodic) {
      add_bond(i, Dir::Right);
      add_bond(i, Dir::Down);
    } else {
      if (c + 1 < L) add_bond(i, Dir::Right);
      if (r + 1 < L) add_bond(i, Dir::Down);
      if (r == 0) add_bond(i, Dir::Up);
      if (c == 0) add_bond(i, Dir::Left);
      if (r == L - 1) add_bond(i, Dir::Down);
      if (c == L - 1) add_bond(i, Dir::Right);
    }
  }

  duals_.reserve(bonds_.size());
  for (int b = 0; b < static_cast<int>(bonds_.size()); ++b) {
    const Bond& bond = bonds_[b];
    const int r = row_of(bond.site), c = col_of(bond.site);
    DualEdge e{};
    switch (bond.dir) {
      case Dir::Right:
        e = DualEdge{2 * r, 2 * c + 1, true};
        break;
      case Dir::Left:
        e = DualEdge{2 * r, 2 * c - 1, true};
        break;
      case Dir::Down:
        e = DualEdge{2 * r + 1, 2 * c, false};
        break;
      case Dir::Up:
        e = DualEdge{2 * r - 1, 2 * c, false};
        break;
    }
    if (bc == Bc::Periodic) {
      e.row2 = wrap(e.row2, 2 * L);
      e.col2 = wrap(e.col2, 2 * L);
    }
    duals_.push_back(e);
    auto [it, inserted] =
        dual_index_.insert({{e.row2, e.col2, e.vertical}, b});
    if (!inserted) {
      throw std::logic_error("duplicate dual edge");
    }
  }
}

int Geometry::bond_partner(const Bond& b) const {
  return neighbors_[b.site][static_cast<int>(b.dir)];
}

DualEdge Geometry::dual_edge(int bond_index) const {
  return duals_.at(bond_index);
}

int Geometry::bond_from_dual(const DualEdge& e) const {
  auto it = dual_index_.find({e.row2, e.col2, e.vertical});
  if (it == dual_index_.end()) {
    throw std::out_of_range("dual edge not in geometry");
  }
  return it->second;
}

std::array<std::pair<int, int>, 2> Geometry::dual_endpoints(
    const DualEdge& e) const {
  std::array<std::pair<int, int>, 2> pts;
  if (e.vertical) {
    pts = {{{e.row2 - 1, e.col2}, {e.row2 + 1, e.col2}}};
  } else {
    pts = {{{e.row2, e.col2 - 1}, {e.row2, e.col2 + 1}}};
  }
  if (bc_ == Bc::Periodic) {
    for (auto& [x, y] : pts) {
      x = wrap(x, 2 * L_);
      y = wrap(y, 2 * L_);
    }
  }
  return pts;
}

}  // namespace ising
