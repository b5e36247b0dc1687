#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinwit/spin_algebra.hpp"

namespace spinwit {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

class DensityMatrix;

// Normalized state vector in the lattice's tensor slot ordering.
class PureState {
 public:
  explicit PureState(StateVector amplitudes);
  static PureState normalized(StateVector amplitudes);

  const StateVector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  DensityMatrix density() const;

 private:
  StateVector amplitudes_;
};

// Hermitian, unit trace, positive semidefinite (each to its tolerance above).
class DensityMatrix {
 public:
  explicit DensityMatrix(OperatorMatrix entries);

  const OperatorMatrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }
  double min_eigenvalue() const;

 private:
  OperatorMatrix entries_;
};

Complex expectation(const PureState& state, const OperatorMatrix& op);
Complex expectation(const DensityMatrix& state, const OperatorMatrix& op);

// (|01> - |10>)/sqrt(2), slot 0 leftmost, local index 0 = spin up.
PureState singlet_pair();

// |m = s> on every site.
PureState all_up_state(const LatticeSpec& lattice);

PureState product_state(std::span<const PureState> locals);
DensityMatrix product_density(std::span<const DensityMatrix> locals);

// splitmix64 step; used to derive independent per-worker seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Normalized complex Gaussian vector (Haar measure on pure states).
PureState haar_random_pure(Eigen::Index dim, std::uint64_t seed);

// Partial trace of a Haar state on a dim*ancilla_dim space (induced measure).
// ancilla_dim = dim gives the Hilbert-Schmidt measure.
DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed, Eigen::Index ancilla_dim = 0);

// sum_n w_n rho^1_n ⊗ ... ⊗ rho^N_n with Dirichlet(1) weights and
// induced-measure single-site states.
DensityMatrix random_separable_mixture(const LatticeSpec& lattice, int n_terms, std::uint64_t seed);

// Same mixture layout with pure single-site factors.
DensityMatrix random_pure_product_mixture(const LatticeSpec& lattice, int n_terms, std::uint64_t seed);

// Delta^2 M_x + Delta^2 M_y + Delta^2 M_z; equals T * chi_bar on a thermal state.
double variance_sum(const PureState& state, const LatticeSpec& lattice);
double variance_sum(const DensityMatrix& state, const LatticeSpec& lattice);

// U^{⊗N} with U = exp(-i angle n.S) for a random axis n and angle.
OperatorMatrix random_global_rotation(const LatticeSpec& lattice, std::uint64_t seed);
PureState rotate(const PureState& state, const OperatorMatrix& unitary);
DensityMatrix rotate(const DensityMatrix& state, const OperatorMatrix& unitary);

}  // namespace spinwit
