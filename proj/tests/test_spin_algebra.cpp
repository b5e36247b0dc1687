#include <doctest.h>

#include <cmath>

#include "spinwit/errors.hpp"
#include "spinwit/spin_algebra.hpp"
#include "spinwit/states.hpp"
#include "support.hpp"

using namespace spinwit;
using testing::max_abs;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("spin-1/2 matrices are half the Pauli matrices") {
  const SpinTriple s = spin_matrices(SpinLength{1});
  OperatorMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 0.5, 0.5, 0;
  sy << 0, -0.5 * I, 0.5 * I, 0;
  sz << 0.5, 0, 0, -0.5;
  CHECK(max_abs(s.x - sx) < 1e-15);
  CHECK(max_abs(s.y - sy) < 1e-15);
  CHECK(max_abs(s.z - sz) < 1e-15);
}

TEST_CASE("spin-1 matrices from the ladder formula") {
  const SpinTriple s = spin_matrices(SpinLength{2});
  const double r = 1.0 / std::sqrt(2.0);
  OperatorMatrix sx = OperatorMatrix::Zero(3, 3);
  sx(0, 1) = sx(1, 0) = sx(1, 2) = sx(2, 1) = r;
  CHECK(max_abs(s.x - sx) < 1e-15);
  CHECK(max_abs(s.z - OperatorMatrix(Eigen::Vector3cd(1, 0, -1).asDiagonal())) < 1e-15);
}

TEST_CASE("trivial site is rejected") {
  CHECK_THROWS_AS(spin_matrices(SpinLength{0}), Error);
  CHECK_THROWS_WITH(spin_matrices(SpinLength{0}), doctest::Contains("trivial site"));
}

TEST_CASE("casimir and cyclic commutators for s = 1/2 .. 3") {
  for (int two_s = 1; two_s <= 6; ++two_s) {
    CAPTURE(two_s);
    const SpinTriple s = spin_matrices(SpinLength{two_s});
    const double ss = 0.5 * two_s * (0.5 * two_s + 1.0);
    const auto d = two_s + 1;
    CHECK(max_abs(s.x * s.x + s.y * s.y + s.z * s.z - ss * OperatorMatrix::Identity(d, d)) < 1e-12);
    CHECK(max_abs(commutator(s.x, s.y) - I * s.z) < 1e-12);
    CHECK(max_abs(commutator(s.y, s.z) - I * s.x) < 1e-12);
    CHECK(max_abs(commutator(s.z, s.x) - I * s.y) < 1e-12);
    for (Axis a : kAxes) CHECK(hermiticity_defect(s[a]) < 1e-15);
  }
}

TEST_CASE("embed places the factor in the requested slot") {
  const LatticeSpec two(2, SpinLength{1});
  const OperatorMatrix sz0 = embed(spin_matrix(SpinLength{1}, Axis::z), 0, two);
  CHECK(max_abs(sz0 - OperatorMatrix(Eigen::Vector4cd(0.5, 0.5, -0.5, -0.5).asDiagonal())) < 1e-15);

  const LatticeSpec three(3, SpinLength{2});
  CHECK(max_abs(embed(OperatorMatrix::Identity(3, 3), 1, three) - OperatorMatrix::Identity(27, 27)) == 0.0);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(embed(spin_matrix(SpinLength{2}, Axis::x), i, three).trace()) < 1e-14);

  CHECK_THROWS_AS(embed(OperatorMatrix::Identity(2, 2), 0, three), Error);
  CHECK_THROWS_AS(embed(OperatorMatrix::Identity(3, 3), 3, three), Error);
}

TEST_CASE("operators on distinct sites commute") {
  for (int two_s : {1, 2, 3}) {
    const LatticeSpec lattice(3, SpinLength{two_s});
    const auto d = two_s + 1;
    const OperatorMatrix a = testing::random_matrix(d, 11u * two_s);
    const OperatorMatrix b = testing::random_matrix(d, 17u * two_s);
    CHECK(max_abs(commutator(embed(a, 0, lattice), embed(b, 2, lattice))) < 1e-12);
    CHECK(max_abs(commutator(embed(a, 1, lattice), embed(b, 1, lattice))) > 1e-3);
  }
}

TEST_CASE("accumulate_pair matches explicit embedding") {
  const LatticeSpec lattice(3, SpinLength{2});
  const OperatorMatrix a = testing::random_matrix(3, 5);
  const OperatorMatrix b = testing::random_matrix(3, 6);
  OperatorMatrix target = OperatorMatrix::Zero(27, 27);
  accumulate_pair(target, Complex(0.7, 0.2), a, 2, b, 0, lattice);
  CHECK(max_abs(target - Complex(0.7, 0.2) * embed(a, 2, lattice) * embed(b, 0, lattice)) < 1e-12);
}

TEST_CASE("total magnetization spectrum") {
  const LatticeSpec two(2, SpinLength{1});
  CHECK(max_abs(total_component(Axis::z, two) - OperatorMatrix(Eigen::Vector4cd(1, 0, 0, -1).asDiagonal())) < 1e-15);

  for (int two_s : {1, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      const LatticeSpec lattice(n, SpinLength{two_s});
      if (lattice.hilbert_dim() > 300) continue;
      CAPTURE(two_s);
      CAPTURE(n);
      const double ns = lattice.total_spin();
      for (Axis a : kAxes) {
        const auto ev = testing::reference_eigenvalues(total_component(a, lattice));
        CHECK(std::abs(ev.front() + ns) < 1e-10);
        CHECK(std::abs(ev.back() - ns) < 1e-10);
        // extremes non-degenerate, values in integer steps of 1
        if (ev.size() > 1) {
          CHECK(ev[1] - ev[0] > 0.5);
          CHECK(ev[ev.size() - 1] - ev[ev.size() - 2] > 0.5);
        }
        for (double v : ev) CHECK(std::abs(v + ns - std::round(v + ns)) < 1e-9);
      }
      OperatorMatrix sparse = OperatorMatrix(total_component_sparse(Axis::y, lattice));
      CHECK(max_abs(sparse - total_component(Axis::y, lattice)) < 1e-15);
    }
  }
}

TEST_CASE("casimir of the total spin has eigenvalues j(j+1)") {
  for (int two_s : {1, 2, 3}) {
    for (int n = 2; n <= 4; ++n) {
      const LatticeSpec lattice(n, SpinLength{two_s});
      if (lattice.hilbert_dim() > 300) continue;
      const OperatorMatrix m2 = total_spin_casimir(lattice);
      OperatorMatrix summed = OperatorMatrix::Zero(m2.rows(), m2.cols());
      for (Axis a : kAxes) {
        const OperatorMatrix m = total_component(a, lattice);
        summed += m * m;
      }
      CHECK(max_abs(m2 - summed) < 1e-10);
      const double ns = lattice.total_spin();
      for (double v : testing::reference_eigenvalues(m2)) {
        const double j = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(v, 0.0)));
        CHECK(std::abs(2.0 * j - std::round(2.0 * j)) < 1e-8);
        CHECK(j <= ns + 1e-9);
      }
    }
  }
}

TEST_CASE("magnetization extremes on product states") {
  for (int two_s : {1, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      const LatticeSpec lattice(n, SpinLength{two_s});
      if (lattice.hilbert_dim() > 300) continue;
      const PureState up = all_up_state(lattice);
      CHECK(std::abs(expectation(up, total_component(Axis::z, lattice)) - lattice.total_spin()) < 1e-12);
      CHECK(std::abs(expectation(up, total_spin_casimir(lattice)) -
                     lattice.total_spin() * (lattice.total_spin() + 1.0)) < 1e-10);
    }
  }
}

TEST_CASE("singlet carries no magnetization") {
  const LatticeSpec two(2, SpinLength{1});
  const PureState singlet = singlet_pair();
  for (Axis a : kAxes) CHECK(std::abs(expectation(singlet, total_component(a, two))) < 1e-15);
  CHECK(std::abs(expectation(singlet, total_spin_casimir(two))) < 1e-15);
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(LatticeSpec(0, SpinLength{1}), Error);
  CHECK_THROWS_AS(LatticeSpec(3, SpinLength{1}, {{1, 1, 1.0}}), Error);
  CHECK_THROWS_AS(LatticeSpec(3, SpinLength{1}, {{2, 1, 1.0}}), Error);
  CHECK_THROWS_AS(LatticeSpec(3, SpinLength{1}, {{0, 3, 1.0}}), Error);
  try {
    LatticeSpec(17, SpinLength{1});
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resource_cap);
  }
  CHECK(LatticeSpec(16, SpinLength{1}).hilbert_dim() == 65536);
  CHECK(LatticeSpec(4, SpinLength{2}).stride(0) == 27);
  CHECK(LatticeSpec(4, SpinLength{2}).stride(3) == 1);
}
