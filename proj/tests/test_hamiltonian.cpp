#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ising/hamiltonian.hpp"
#include "ising/rng.hpp"

using namespace ising;

namespace {

SpinConfig random_config(const Geometry& g, std::uint64_t salt) {
  SpinConfig s(g.num_sites());
  for (int i = 0; i < g.num_sites(); ++i) {
    s[i] = rng::uniform(42, 9, salt, i) < 0.5 ? Spin{-1} : Spin{1};
  }
  return s;
}

}  // namespace

TEST_CASE("model params derive q from delta") {
  ModelParams p{1.0, 1e-3};
  CHECK(std::exp(-2.0 * p.q()) == doctest::Approx(p.delta).epsilon(1e-15));
  CHECK(ModelParams::from_q(1.0, p.q()).delta ==
        doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(std::isinf(ModelParams{1.0, 0.0}.q()));
  CHECK_THROWS_AS((ModelParams{1.0, 1.5}.q()), std::invalid_argument);
}

TEST_CASE("single-configuration energies") {
  Geometry per(3, Bc::Periodic);
  Geometry plus(3, Bc::Plus);
  CHECK(energy_single(per, 1.0, all_plus(per)) == -18.0);
  CHECK(energy_single(plus, 1.0, all_plus(plus)) == -24.0);

  SpinConfig one_flip = all_plus(per);
  one_flip[4] = -1;
  CHECK(energy_single(per, 1.0, one_flip) == -18.0 + 8.0);
}

TEST_CASE("pair Hamiltonian restricts to the single one on the diagonal") {
  const ModelParams p{0.8, 0.2};
  for (KernelKind kind :
       {KernelKind::ReversiblePlus, KernelKind::ReversiblePeriodic}) {
    Geometry g(3, bc_of(kind));
    for (std::uint64_t salt = 0; salt < 20; ++salt) {
      const SpinConfig s = random_config(g, salt);
      CHECK(energy_pair(g, p, kind, s, s) ==
            doctest::Approx(energy_single(g, p.J, s)).epsilon(1e-13));
    }
  }
}

TEST_CASE("irreversible diagonal picks up -q|Lambda|") {
  Geometry g(3, Bc::Periodic);
  const ModelParams p{0.8, 0.2};
  for (std::uint64_t salt = 0; salt < 20; ++salt) {
    const SpinConfig s = random_config(g, salt);
    CHECK(energy_pair(g, p, KernelKind::IrreversiblePeriodic, s, s) ==
          doctest::Approx(energy_single(g, p.J, s) - p.q() * g.num_sites())
              .epsilon(1e-13));
  }
}

TEST_CASE("pair Hamiltonian symmetry and its irreversible failure") {
  const ModelParams p{0.8, 0.2};
  for (KernelKind kind :
       {KernelKind::ReversiblePlus, KernelKind::ReversiblePeriodic}) {
    Geometry g(3, bc_of(kind));
    for (std::uint64_t salt = 0; salt < 20; ++salt) {
      const SpinConfig s = random_config(g, 2 * salt);
      const SpinConfig t = random_config(g, 2 * salt + 1);
      CHECK(energy_pair(g, p, kind, s, t) ==
            doctest::Approx(energy_pair(g, p, kind, t, s)).epsilon(1e-13));
    }
  }

  Geometry g(3, Bc::Periodic);
  bool found_asymmetric = false;
  for (std::uint64_t salt = 0; salt < 50 && !found_asymmetric; ++salt) {
    const SpinConfig s = random_config(g, 2 * salt);
    const SpinConfig t = random_config(g, 2 * salt + 1);
    const double a = energy_pair(g, p, KernelKind::IrreversiblePeriodic, s, t);
    const double b = energy_pair(g, p, KernelKind::IrreversiblePeriodic, t, s);
    if (std::abs(a - b) > 1e-9) found_asymmetric = true;
  }
  CHECK(found_asymmetric);
}

TEST_CASE("kind/geometry mismatch is rejected") {
  Geometry g(3, Bc::Plus);
  const ModelParams p{1.0, 0.1};
  const SpinConfig s = all_plus(g);
  CHECK_THROWS_AS(energy_pair(g, p, KernelKind::ReversiblePeriodic, s, s),
                  std::invalid_argument);
  CHECK_THROWS_AS(energy_pair(g, p, KernelKind::IrreversiblePeriodic, s, s),
                  std::invalid_argument);
}

TEST_CASE("local fields on the all-plus configuration") {
  const double J = 0.7;
  Geometry per(3, Bc::Periodic);
  Geometry plus(3, Bc::Plus);
  const SpinConfig sp = all_plus(per);
  const SpinConfig sl = all_plus(plus);
  CHECK(local_field(per, J, KernelKind::ReversiblePeriodic, sp, 4) ==
        doctest::Approx(2 * J));
  // Corner: two in-lattice neighbors plus boundary term (J/2)*2.
  CHECK(local_field(plus, J, KernelKind::ReversiblePlus, sl, 0) ==
        doctest::Approx(2 * J));
  CHECK(local_field(per, J, KernelKind::IrreversiblePeriodic, sp, 4) ==
        doctest::Approx(2 * J));
}

TEST_CASE("single-site decomposition of the pair Hamiltonians") {
  const ModelParams p{1.3, 0.05};
  for (KernelKind kind : {KernelKind::ReversiblePlus,
                          KernelKind::ReversiblePeriodic,
                          KernelKind::IrreversiblePeriodic}) {
    Geometry g(3, bc_of(kind));
    for (std::uint64_t salt = 0; salt < 30; ++salt) {
      const SpinConfig s = random_config(g, 2 * salt);
      const SpinConfig t = random_config(g, 2 * salt + 1);
      const double scale =
          std::max(1.0, std::abs(energy_pair(g, p, kind, s, t)));
      CHECK(decomposition_check(g, p, kind, s, t) <= 1e-12 * scale);
    }
    const SpinConfig ones = all_plus(g);
    CHECK(decomposition_check(g, p, kind, ones, ones) ==
          doctest::Approx(0.0).epsilon(1e-13));
  }
}

TEST_CASE("field identity sum h_i sigma_i + G = -H") {
  const double J = 1.1;
  for (KernelKind kind :
       {KernelKind::ReversiblePlus, KernelKind::ReversiblePeriodic}) {
    Geometry g(3, bc_of(kind));
    for (std::uint64_t idx = 0; idx < 512; ++idx) {
      const SpinConfig s = config_from_index(g, idx);
      double acc = boundary_sum(g, J, kind, s);
      for (int i = 0; i < g.num_sites(); ++i) {
        acc += local_field(g, J, kind, s, i) * s[i];
      }
      CHECK(acc == doctest::Approx(-energy_single(g, J, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("single tau-flip changes the pair energy by bond steps") {
  const ModelParams p{0.9, 0.15};
  const double q = p.q();
  for (KernelKind kind : {KernelKind::ReversiblePlus,
                          KernelKind::ReversiblePeriodic,
                          KernelKind::IrreversiblePeriodic}) {
    Geometry g(3, bc_of(kind));
    for (std::uint64_t salt = 0; salt < 10; ++salt) {
      const SpinConfig s = random_config(g, 2 * salt);
      SpinConfig t = random_config(g, 2 * salt + 1);
      const double before = energy_pair(g, p, kind, s, t);
      const int site = static_cast<int>(salt) % g.num_sites();
      t[site] = -t[site];
      const double change = energy_pair(g, p, kind, s, t) - before;
      // change = 2J * (integer) +- 2q
      const double steps_minus = (change - 2 * q) / (2 * p.J);
      const double steps_plus = (change + 2 * q) / (2 * p.J);
      const bool integral =
          std::abs(steps_minus - std::round(steps_minus)) < 1e-9 ||
          std::abs(steps_plus - std::round(steps_plus)) < 1e-9;
      CHECK(integral);
    }
  }
}

TEST_CASE("phi values") {
  const double J = 0.6;
  Geometry per(3, Bc::Periodic);
  const SpinConfig sp = all_plus(per);
  CHECK(phi(per, J, KernelKind::ReversiblePeriodic, sp, 4) ==
        doctest::Approx(std::exp(-4 * J)));
  CHECK(phi(per, J, KernelKind::IrreversiblePeriodic, sp, 4) ==
        doctest::Approx(std::exp(-4 * J)));

  SpinConfig flipped = sp;
  flipped[4] = -1;
  CHECK(phi(per, J, KernelKind::ReversiblePeriodic, flipped, 4) ==
        doctest::Approx(std::exp(4 * J)));
}

TEST_CASE("f factor against a site-by-site brute-force product") {
  Geometry g(3, Bc::Plus);
  const ModelParams p{0.8, 0.3};
  SpinConfig s = all_plus(g);
  s[4] = -1;
  double brute = 1.0;
  for (int i = 0; i < g.num_sites(); ++i) {
    brute *= 1.0 + p.delta * phi(g, p.J, KernelKind::ReversiblePlus, s, i);
  }
  CHECK(f_factor(g, p, KernelKind::ReversiblePlus, s) ==
        doctest::Approx(brute).epsilon(1e-13));

  Geometry per(3, Bc::Periodic);
  const SpinConfig ones = all_plus(per);
  CHECK(f_factor(per, p, KernelKind::ReversiblePeriodic, ones) ==
        doctest::Approx(std::pow(1.0 + p.delta * std::exp(-4 * p.J), 9)));

  const ModelParams frozen{0.8, 0.0};
  CHECK(f_factor(per, frozen, KernelKind::ReversiblePeriodic, ones) == 1.0);
}

TEST_CASE("canonical index round trip") {
  Geometry g(3, Bc::Periodic);
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    CHECK(config_index(config_from_index(g, idx)) == idx);
  }
}
