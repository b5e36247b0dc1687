#include <doctest.h>

#include <cmath>

#include "spinwit/errors.hpp"
#include "spinwit/observables.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/states.hpp"
#include "support.hpp"

using namespace spinwit;
using testing::max_abs;

namespace {

ModelSpec free_spins(int n, SpinLength spin) {
  std::vector<Coupling> none;
  for (int i = 0; i + 1 < n; ++i) none.push_back({i, i + 1, 0.0});
  return ModelSpec::heisenberg(LatticeSpec(n, spin, none));
}

// Partial transpose on the second qubit, written out index by index.
OperatorMatrix partial_transpose(const OperatorMatrix& rho) {
  OperatorMatrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

DensityMatrix werner(double p) {
  return DensityMatrix(p * singlet_pair().density().matrix() + (1.0 - p) * OperatorMatrix::Identity(4, 4) / 4.0);
}

}  // namespace

TEST_CASE("isotropic zero-field models") {
  for (const ModelSpec& model : {ModelSpec::xxx_chain(6, SpinLength{1}, 1.0, Boundary::periodic),
                                 ModelSpec::xxx_chain(4, SpinLength{2}, 1.0, Boundary::open),
                                 ModelSpec::dimer_chain(2, 1.0, 0.0)}) {
    const ThermalSystem system = ThermalSystem::from_model(model);
    for (double T : {0.1, 0.5, 1.0, 3.0}) {
      const MagnetizationVector m = magnetization_vector(system, T);
      for (Axis a : kAxes) CHECK(std::abs(m[a]) < 1e-10);
      const SusceptibilityTriple chi = susceptibilities(system, T);
      CHECK(chi.chi_x == doctest::Approx(chi.chi_z).epsilon(1e-8));
      CHECK(chi.chi_y == doctest::Approx(chi.chi_z).epsilon(1e-8));
      for (Axis a : kAxes) CHECK(chi[a] >= -1e-10);
    }
  }
}

TEST_CASE("dimer in a strong field is fully polarized against it") {
  const ThermalSystem system = ThermalSystem::from_model(ModelSpec::dimer_chain(2, 1.0, 10.0));
  CHECK(magnetization(system, 0.1, Axis::z) / 2.0 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(magnetization(system, 0.1, Axis::z) == doctest::Approx(2.0 * oracle::dimer_closed_form(1.0, 10.0, 0.1).m_z));
}

TEST_CASE("singlet dimer has vanishing susceptibility at low T") {
  const ThermalSystem system = ThermalSystem::from_model(ModelSpec::dimer_chain(1, 1.0, 0.0));
  for (Axis a : kAxes) CHECK(fluctuation_susceptibility(system, 0.02, a) < 1e-50);
}

TEST_CASE("free spins follow the Curie law") {
  for (int two_s : {1, 2}) {
    const int n = 3;
    const SpinLength spin{two_s};
    const ThermalSystem system = ThermalSystem::from_model(free_spins(n, spin));
    for (double T : {0.2, 1.0, 7.0}) {
      const SusceptibilityTriple chi = susceptibilities(system, T);
      CHECK(chi.chi_z / n == doctest::Approx(oracle::curie_law(spin, T)).epsilon(1e-12));
      CHECK(chi.total() / n == doctest::Approx(spin.value() * (spin.value() + 1.0) / T).epsilon(1e-12));
    }
  }
  CHECK(oracle::curie_law(SpinLength{1}, 2.0) == doctest::Approx(1.0 / 8.0));
  CHECK(oracle::curie_law(SpinLength{2}, 2.0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("derivative susceptibility") {
  SUBCASE("free spin-1/2") {
    const ModelSpec model = free_spins(2, SpinLength{1});
    for (double T : {0.5, 2.0})
      CHECK(derivative_susceptibility(model, T, Axis::z, 1e-3) / 2.0 == doctest::Approx(0.25 / T).epsilon(1e-5));
    // chi T -> 1/4 per spin at high temperature
    CHECK(derivative_susceptibility(model, 1e4, Axis::x, 1e-1) * 1e4 / 2.0 == doctest::Approx(0.25).epsilon(1e-6));
  }
  SUBCASE("commuting case agrees with the fluctuation form") {
    const ModelSpec model = ModelSpec::xxx_chain(8, SpinLength{1}, 1.0, Boundary::periodic);
    const ThermalSystem system = ThermalSystem::from_model(model);
    for (double T : {0.5, 2.0}) {
      const double fluct = fluctuation_susceptibility(system, T, Axis::z);
      CHECK(derivative_susceptibility(model, T, Axis::z, 1e-3) == doctest::Approx(fluct).epsilon(1e-4));
    }
  }
  SUBCASE("step too large is flagged") {
    const ModelSpec model = ModelSpec::xxx_chain(4, SpinLength{1}, 1.0, Boundary::periodic);
    CHECK_THROWS_AS(derivative_susceptibility(model, 0.1, Axis::z, 0.8), Error);
    CHECK_THROWS_AS(derivative_susceptibility(model, 1.0, Axis::z, -1e-3), Error);
  }
}

TEST_CASE("fluctuation susceptibility needs T > 0") {
  const ThermalSystem system = ThermalSystem::from_model(ModelSpec::dimer_chain(1, 1.0, 0.0));
  CHECK_THROWS_AS(fluctuation_susceptibility(system, 0.0, Axis::z), Error);
  CHECK_NOTHROW(magnetization(system, 0.0, Axis::z));
}

TEST_CASE("state path agrees with the spectrum path on thermal states") {
  const ModelSpec model = ModelSpec::xxx_chain(4, SpinLength{2}, 1.0, Boundary::periodic).with_field(0.4, Axis::z);
  const ThermalSystem system = ThermalSystem::from_model(model);
  for (double T : {0.2, 1.0, 4.0}) {
    const DensityMatrix rho = thermal_density_matrix(system.spectrum(), T);
    const SusceptibilityTriple chi = susceptibilities(system, T);
    CHECK(variance_sum(rho, model.lattice) == doctest::Approx(T * chi.total()).epsilon(1e-10));
    CHECK(magnetization(rho, model.lattice, Axis::z) == doctest::Approx(magnetization(system, T, Axis::z)).epsilon(1e-10));
  }
}

TEST_CASE("all-up product saturates T chi_bar = Ns") {
  for (int two_s : {1, 2, 3}) {
    const LatticeSpec lattice(3, SpinLength{two_s});
    CHECK(variance_sum(all_up_state(lattice), lattice) == doctest::Approx(lattice.total_spin()).epsilon(1e-12));
  }
}

TEST_CASE("two-site correlators") {
  const LatticeSpec two(2, SpinLength{1});
  const DensityMatrix upup = all_up_state(two).density();
  CHECK(two_site_correlator(upup, two, 0, 1, Axis::z) == doctest::Approx(0.25));
  CHECK(std::abs(two_site_correlator(upup, two, 0, 1, Axis::x)) < 1e-15);
  CHECK(std::abs(two_site_correlator(upup, two, 0, 1, Axis::y)) < 1e-15);
  CHECK_THROWS_AS(two_site_correlator(upup, two, 1, 1, Axis::z), Error);
  CHECK_THROWS_AS(two_site_correlator(upup, two, 0, 2, Axis::z), Error);

  SUBCASE("sum rule over all pairs gives <M_z^2>") {
    const LatticeSpec lattice(3, SpinLength{2});
    const DensityMatrix rho = random_density_matrix(27, 3);
    const OperatorMatrix sz = spin_matrix(SpinLength{2}, Axis::z);
    double total = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        total += i == j ? (rho.matrix() * embed(sz * sz, i, lattice)).trace().real()
                        : two_site_correlator(rho, lattice, i, j, Axis::z);
    const OperatorMatrix mz = total_component(Axis::z, lattice);
    CHECK(total == doctest::Approx((rho.matrix() * mz * mz).trace().real()).epsilon(1e-10));
  }
}

TEST_CASE("reduced density matrices") {
  const LatticeSpec two(2, SpinLength{1});
  const int all[] = {0, 1};
  const int first[] = {0};
  const DensityMatrix singlet = singlet_pair().density();
  CHECK(max_abs(reduced_density_matrix(singlet, two, all).matrix() - singlet.matrix()) < 1e-15);
  CHECK(max_abs(reduced_density_matrix(singlet, two, first).matrix() - 0.5 * OperatorMatrix::Identity(2, 2)) < 1e-15);

  SUBCASE("product state factors are recovered") {
    const LatticeSpec lattice(3, SpinLength{2});
    const DensityMatrix a = random_density_matrix(3, 1);
    const DensityMatrix b = random_density_matrix(3, 2);
    const DensityMatrix c = random_density_matrix(3, 3);
    const DensityMatrix locals[] = {a, b, c};
    const DensityMatrix product = product_density(locals);
    const int keep_a[] = {0}, keep_c[] = {2}, keep_bc[] = {1, 2};
    CHECK(max_abs(reduced_density_matrix(product, lattice, keep_a).matrix() - a.matrix()) < 1e-12);
    CHECK(max_abs(reduced_density_matrix(product, lattice, keep_c).matrix() - c.matrix()) < 1e-12);
    const DensityMatrix bc[] = {b, c};
    CHECK(max_abs(reduced_density_matrix(product, lattice, keep_bc).matrix() - product_density(bc).matrix()) < 1e-12);
  }
  SUBCASE("pure and mixed paths agree") {
    const LatticeSpec lattice(4, SpinLength{1});
    const PureState psi = haar_random_pure(16, 8);
    const int keep[] = {1, 3};
    CHECK(max_abs(reduced_density_matrix(psi, lattice, keep).matrix() -
                  reduced_density_matrix(psi.density(), lattice, keep).matrix()) < 1e-14);
  }
  SUBCASE("thermal reductions") {
    const ModelSpec model = ModelSpec::xxx_chain(5, SpinLength{1}, 1.0, Boundary::periodic);
    const ThermalSystem system = ThermalSystem::from_model(model);
    const int keep[] = {0, 1};
    const auto reductions = eigenstate_reductions(system.spectrum(), model.lattice, keep);
    for (double T : {0.0, 0.3, 2.0}) {
      const DensityMatrix direct = reduced_density_matrix(thermal_density_matrix(system.spectrum(), T), model.lattice, keep);
      CHECK(max_abs(thermal_reduced_density_matrix(reductions, system.weights(T)).matrix() - direct.matrix()) < 1e-12);
    }
  }
  SUBCASE("bad site lists") {
    const int empty[] = {0};
    const int unsorted[] = {1, 0};
    const int repeated[] = {0, 0};
    const int outside[] = {0, 2};
    CHECK_THROWS_AS(reduced_density_matrix(singlet, two, std::span<const int>(empty, 0)), Error);
    CHECK_THROWS_AS(reduced_density_matrix(singlet, two, unsorted), Error);
    CHECK_THROWS_AS(reduced_density_matrix(singlet, two, repeated), Error);
    CHECK_THROWS_AS(reduced_density_matrix(singlet, two, outside), Error);
  }
}

TEST_CASE("concurrence") {
  CHECK(concurrence(singlet_pair().density()) == doctest::Approx(1.0));
  const LatticeSpec two(2, SpinLength{1});
  for (int k = 0; k < 20; ++k) {
    const PureState locals[] = {haar_random_pure(2, 2 * k), haar_random_pure(2, 2 * k + 1)};
    CHECK(concurrence(product_state(locals).density()) < 1e-7);
  }
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    CAPTURE(p);
    CHECK(concurrence(werner(p)) == doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)).epsilon(1e-9));
  }
  SUBCASE("Werner boundary agrees with the partial transpose test") {
    auto min_pt_eigenvalue = [](double p) { return testing::reference_eigenvalues(partial_transpose(werner(p).matrix())).front(); };
    CHECK(std::abs(min_pt_eigenvalue(1.0 / 3.0)) < 1e-12);
    CHECK(min_pt_eigenvalue(1.0 / 3.0 + 1e-3) < 0.0);
    CHECK(concurrence(werner(1.0 / 3.0 + 1e-3)) > 0.0);
    CHECK(min_pt_eigenvalue(1.0 / 3.0 - 1e-3) > 0.0);
    CHECK(concurrence(werner(1.0 / 3.0 - 1e-3)) == 0.0);
  }
  CHECK_THROWS_AS(concurrence(random_density_matrix(8, 1)), Error);
}
