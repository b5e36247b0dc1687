#pragma once

#include <array>
#include <span>
#include <vector>

#include "spinwit/models.hpp"
#include "spinwit/states.hpp"
#include "spinwit/thermal.hpp"

namespace spinwit {

// Thermal magnetization in total-spin units (spin-operator convention).
struct MagnetizationVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double operator[](Axis axis) const;
  double norm_squared() const { return x * x + y * y + z * z; }
};

struct SusceptibilityTriple {
  double chi_x = 0.0, chi_y = 0.0, chi_z = 0.0;
  double T = 0.0;

  double operator[](Axis axis) const;
  double total() const { return chi_x + chi_y + chi_z; }
};

// <n|M_a|n> and <n|M_a^2|n> for every eigenstate n.
struct AxisMoments {
  Eigen::VectorXd mean;
  Eigen::VectorXd square;
};

AxisMoments axis_moments(const Spectrum& spectrum, const LatticeSpec& lattice, Axis axis);

// A diagonalized lattice plus the per-eigenstate magnetization moments all
// thermal evaluations need. Immutable after construction; share freely
// between threads.
class ThermalSystem {
 public:
  ThermalSystem(LatticeSpec lattice, Spectrum spectrum, ThermalTolerances tolerances = {});

  static ThermalSystem from_model(const ModelSpec& model, ThermalTolerances tolerances = {});

  const LatticeSpec& lattice() const { return lattice_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const AxisMoments& moments(Axis axis) const { return moments_[static_cast<std::size_t>(axis)]; }
  const ThermalTolerances& tolerances() const { return tolerances_; }

  ThermalWeights weights(double T) const;

 private:
  LatticeSpec lattice_;
  Spectrum spectrum_;
  ThermalTolerances tolerances_;
  std::array<AxisMoments, 3> moments_;
};

double magnetization(const ThermalSystem& system, double T, Axis axis);
MagnetizationVector magnetization_vector(const ThermalSystem& system, double T);
double magnetization_variance(const ThermalSystem& system, double T, Axis axis);

// chi_a = (<M_a^2> - <M_a>^2) / T.
double fluctuation_susceptibility(const ThermalSystem& system, double T, Axis axis);
SusceptibilityTriple susceptibilities(const ThermalSystem& system, double T);

// chi = d<M_a>/dB_p with H(B_p) = H_model - B_p M_a, i.e. -d<M_a>/dh for the
// +h M_a probe, by central differences. Throws when the step and half-step
// estimates differ by more than 1e-3 relative.
double derivative_susceptibility(const ModelSpec& model, double T, Axis axis, double step,
                                 ThermalTolerances tolerances = {});

double magnetization(const DensityMatrix& state, const LatticeSpec& lattice, Axis axis);
MagnetizationVector magnetization_vector(const DensityMatrix& state, const LatticeSpec& lattice);
MagnetizationVector magnetization_vector(const PureState& state, const LatticeSpec& lattice);

// <S_a^i S_a^j>
double two_site_correlator(const DensityMatrix& state, const LatticeSpec& lattice, int i, int j, Axis axis);

// Partial trace over every site not in `keep` (strictly increasing).
DensityMatrix reduced_density_matrix(const DensityMatrix& state, const LatticeSpec& lattice,
                                     std::span<const int> keep);
DensityMatrix reduced_density_matrix(const PureState& state, const LatticeSpec& lattice,
                                     std::span<const int> keep);

// Reduced state of every eigenvector, so thermal reduced states at any T
// are a weighted sum.
std::vector<OperatorMatrix> eigenstate_reductions(const Spectrum& spectrum, const LatticeSpec& lattice,
                                                  std::span<const int> keep);
DensityMatrix thermal_reduced_density_matrix(std::span<const OperatorMatrix> reductions,
                                             const ThermalWeights& weights);

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

}  // namespace spinwit
