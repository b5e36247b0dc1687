#include <doctest.h>

#include <cmath>

#include "spinwit/errors.hpp"
#include "spinwit/models.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/thermal.hpp"
#include "support.hpp"

using namespace spinwit;
using testing::max_abs;

TEST_CASE("diagonalize a permuted diagonal") {
  OperatorMatrix h = OperatorMatrix::Zero(3, 3);
  h(0, 0) = 3;
  h(1, 1) = 1;
  h(2, 2) = 2;
  const Spectrum spectrum = diagonalize(h);
  CHECK(spectrum.energies()(0) == doctest::Approx(1));
  CHECK(spectrum.energies()(1) == doctest::Approx(2));
  CHECK(spectrum.energies()(2) == doctest::Approx(3));
  CHECK(std::abs(spectrum.eigenvectors()(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(spectrum.eigenvectors()(2, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(spectrum.eigenvectors()(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  OperatorMatrix h = OperatorMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  CHECK_THROWS_AS(diagonalize(h), Error);
}

TEST_CASE("spectrum invariants on real and complex Hamiltonians") {
  const OperatorMatrix real_h = build_xxx_chain(8, SpinLength{1}, 1.0, Boundary::periodic);
  const LatticeSpec lattice(3, SpinLength{2});
  const OperatorMatrix complex_h =
      add_zeeman(build_xxx_chain(3, SpinLength{2}, 1.0, Boundary::open), lattice, Axis::y, 0.4);
  REQUIRE(complex_h.imag().cwiseAbs().maxCoeff() > 0.0);
  for (const OperatorMatrix* h : {&real_h, &complex_h}) {
    const Spectrum spectrum = diagonalize(*h);
    const OperatorMatrix& v = spectrum.eigenvectors();
    const auto n = v.rows();
    CHECK(max_abs(v.adjoint() * v - OperatorMatrix::Identity(n, n)) < 1e-10);
    const OperatorMatrix rebuilt = v * spectrum.energies().cast<Complex>().asDiagonal() * v.adjoint();
    CHECK(max_abs(*h - rebuilt) <= 1e-9 * max_abs(*h));
    CHECK(testing::all_close(std::vector<double>(spectrum.energies().data(), spectrum.energies().data() + n),
                             testing::reference_eigenvalues(*h), 1e-10));
  }
}

TEST_CASE("dimer spectrum") {
  const Spectrum spectrum = diagonalize(build_dimer_chain(1, 1.0, 0.0));
  CHECK(spectrum.energies()(0) == doctest::Approx(-3.0));
  for (int k = 1; k < 4; ++k) CHECK(spectrum.energies()(k) == doctest::Approx(1.0));
}

TEST_CASE("thermal weights") {
  SUBCASE("infinite temperature is uniform") {
    const Spectrum spectrum = diagonalize(build_xxx_chain(4, SpinLength{1}, 1.0, Boundary::periodic));
    const ThermalWeights w = thermal_weights(spectrum, 1e9);
    for (Eigen::Index k = 0; k < w.probabilities.size(); ++k) CHECK(std::abs(w.probabilities(k) - 1.0 / 16) < 1e-8);
  }
  SUBCASE("dimer ground state at T = 0") {
    const ThermalWeights w = thermal_weights(diagonalize(build_dimer_chain(1, 1.0, 0.0)), 0.0);
    CHECK(w.probabilities(0) == 1.0);
    CHECK(w.probabilities.tail(3).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("degenerate ground manifold at the level crossing") {
    const ThermalWeights w = thermal_weights(diagonalize(build_dimer_chain(1, 1.0, 2.0)), 0.0);
    CHECK(w.probabilities(0) == doctest::Approx(0.5));
    CHECK(w.probabilities(1) == doctest::Approx(0.5));
  }
  SUBCASE("two-level closed form") {
    Eigen::VectorXd energies(2);
    const double B = 0.7, T = 0.45;
    energies << -B / 2, B / 2;
    const ThermalWeights w = thermal_weights(energies, T);
    CHECK(w.probabilities(0) == doctest::Approx(1.0 / (1.0 + std::exp(-B / T))).epsilon(1e-14));
  }
  SUBCASE("very low temperature does not overflow") {
    const ThermalWeights w = thermal_weights(diagonalize(build_dimer_chain(2, 1.0, 0.0)), 1e-4);
    CHECK(std::isfinite(w.probabilities.sum()));
    CHECK(w.probabilities(0) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(thermal_weights(diagonalize(build_dimer_chain(1, 1.0, 0.0)), -0.1), Error);
}

TEST_CASE("thermal expectations") {
  const LatticeSpec single(1, SpinLength{1});
  for (double B : {0.2, 1.0, 3.0}) {
    for (double T : {0.1, 0.5, 2.0}) {
      const Spectrum spectrum = diagonalize(add_zeeman(OperatorMatrix::Zero(2, 2), single, Axis::z, B));
      CHECK(thermal_expectation(spectrum, spin_matrix(SpinLength{1}, Axis::z), T) ==
            doctest::Approx(oracle::two_level_magnetization(B, T)).epsilon(1e-12));
      CHECK(thermal_expectation(spectrum, OperatorMatrix::Identity(2, 2), T) == doctest::Approx(1.0));
    }
  }
  const Spectrum dimer = diagonalize(build_dimer_chain(1, 1.0, 0.0));
  // Pauli sigma.sigma = 4 s.s
  const OperatorMatrix sigma_dot = build_dimer_chain(1, 1.0, 0.0);
  CHECK(thermal_expectation(dimer, sigma_dot, 1e-3) == doctest::Approx(-3.0));
  CHECK_THROWS_AS(thermal_expectation(dimer, OperatorMatrix::Identity(3, 3), 1.0), Error);

  OperatorMatrix anti = OperatorMatrix::Zero(4, 4);
  anti(0, 0) = Complex(0, 1);  // imaginary diagonal: non-real expectation
  const Spectrum plain = diagonalize(OperatorMatrix::Zero(4, 4));
  CHECK_THROWS_AS(thermal_expectation(plain, anti, 1.0), Error);
}

TEST_CASE("log partition function") {
  CHECK(log_partition_function(diagonalize(OperatorMatrix::Zero(6, 6)), 0.3) == doctest::Approx(std::log(6.0)));
  for (double B : {0.0, 1.0, 2.5}) {
    for (double T : {0.2, 1.0, 3.0}) {
      const double expected =
          std::log(std::exp(3.0 / T) + std::exp(-1.0 / T) * (1.0 + 2.0 * std::cosh(2.0 * B / T)));
      CHECK(log_partition_function(diagonalize(build_dimer_chain(1, 1.0, B)), T) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("d lnZ / d(-1/T) = <H>") {
    const OperatorMatrix h = build_xxx_chain(6, SpinLength{1}, 1.0, Boundary::periodic);
    const Spectrum spectrum = diagonalize(h);
    for (double T : {0.3, 1.0, 2.0}) {
      const double beta = 1.0 / T, db = 1e-5;
      const double derivative = -(log_partition_function(spectrum, 1.0 / (beta + db)) -
                                  log_partition_function(spectrum, 1.0 / (beta - db))) /
                                (2.0 * db);
      const double energy = thermal_expectation(spectrum, h, T);
      CHECK(std::abs(derivative - energy) < 1e-5 * std::abs(energy));
    }
  }
  CHECK_THROWS_AS(log_partition_function(diagonalize(OperatorMatrix::Zero(2, 2)), 0.0), Error);
}

TEST_CASE("thermal density matrix") {
  const OperatorMatrix h = build_xxx_chain(4, SpinLength{1}, 1.0, Boundary::periodic);
  const Spectrum spectrum = diagonalize(h);
  CHECK(max_abs(thermal_density_matrix(spectrum, 1e9).matrix() - OperatorMatrix::Identity(16, 16) / 16.0) < 1e-8);
  const DensityMatrix ground = thermal_density_matrix(diagonalize(build_dimer_chain(1, 1.0, 0.0)), 0.0);
  CHECK(std::abs((ground.matrix() * ground.matrix()).trace().real() - 1.0) < 1e-12);
  for (double T : {0.1, 0.7, 5.0}) {
    const DensityMatrix rho = thermal_density_matrix(spectrum, T);
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-12);
    CHECK(max_abs(commutator(rho.matrix(), h)) < 1e-10);
  }
}

TEST_CASE("monotonic properties on a temperature grid") {
  const OperatorMatrix h = build_xxx_chain(6, SpinLength{1}, 1.0, Boundary::periodic);
  const Spectrum spectrum = diagonalize(h);
  const OperatorMatrix mz = total_component(Axis::z, LatticeSpec(6, SpinLength{1}));
  const OperatorMatrix mz2 = mz * mz;
  double last_energy = -1e300, last_entropy = -1.0;
  for (double T = 0.05; T < 5.0; T += 0.05) {
    const double energy = thermal_expectation(spectrum, h, T);
    const double entropy = shannon_entropy(thermal_weights(spectrum, T));
    CHECK(energy >= last_energy - 1e-12);
    CHECK(entropy >= last_entropy - 1e-12);
    const double m = thermal_expectation(spectrum, mz, T);
    CHECK(thermal_expectation(spectrum, mz2, T) - m * m >= -1e-10);
    last_energy = energy;
    last_entropy = entropy;
  }
}
