#pragma once

#include "spinwit/spin_algebra.hpp"
#include "spinwit/states.hpp"

namespace spinwit {

struct ThermalTolerances {
  double degeneracy = 1e-9;   // energy window for the T = 0 ground manifold
  double hermiticity = 1e-12; // max |H - H^dagger| accepted by diagonalize
};

// Ascending energies with orthonormal eigenvectors in the columns.
class Spectrum {
 public:
  Spectrum(Eigen::VectorXd energies, OperatorMatrix eigenvectors);

  const Eigen::VectorXd& energies() const { return energies_; }
  const OperatorMatrix& eigenvectors() const { return eigenvectors_; }
  Eigen::Index dim() const { return energies_.size(); }
  double ground_energy() const { return energies_(0); }

 private:
  Eigen::VectorXd energies_;
  OperatorMatrix eigenvectors_;
};

// Full dense eigendecomposition. Rejects input that is not Hermitian to
// `hermiticity_tol`; real symmetric input takes the cheaper real path.
Spectrum diagonalize(const OperatorMatrix& H, double hermiticity_tol = ThermalTolerances{}.hermiticity);

struct ThermalWeights {
  double T = 0.0;
  Eigen::VectorXd probabilities;
};

// p_n = exp(-(E_n - E_0)/T) / sum_m exp(-(E_m - E_0)/T). At T = 0 the weight is
// spread uniformly over levels within `degeneracy_tol` of E_0.
ThermalWeights thermal_weights(const Eigen::VectorXd& energies, double T,
                               double degeneracy_tol = ThermalTolerances{}.degeneracy);
ThermalWeights thermal_weights(const Spectrum& spectrum, double T,
                               double degeneracy_tol = ThermalTolerances{}.degeneracy);

// <n|A|n> for every eigenvector n.
Eigen::VectorXcd eigenbasis_diagonal(const Spectrum& spectrum, const OperatorMatrix& A);

double thermal_expectation(const Spectrum& spectrum, const OperatorMatrix& A, double T,
                           double degeneracy_tol = ThermalTolerances{}.degeneracy);
double thermal_expectation(const ThermalWeights& weights, const Eigen::VectorXcd& eigen_diagonal);

double log_partition_function(const Spectrum& spectrum, double T);

// V diag(p) V^dagger; dense and O(dim^3), meant for small systems.
DensityMatrix thermal_density_matrix(const Spectrum& spectrum, double T,
                                     double degeneracy_tol = ThermalTolerances{}.degeneracy);

double shannon_entropy(const ThermalWeights& weights);

}  // namespace spinwit
