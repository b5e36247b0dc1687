#pragma once

#include <span>

#include "spinwit/observables.hpp"

namespace spinwit {

// chi_bar >= Ns/T holds for every separable state, so margin < 0 certifies
// entanglement.
struct WitnessReport {
  double T = 0.0;
  double chi_bar = 0.0;
  double bound = 0.0;   // N s / T
  double margin = 0.0;  // chi_bar - bound
  bool entangled = false;
};

// Q = 1 - T chi_bar / (N s), P = |<M>|^2 / (N s)^2. P + Q <= 1 for every state.
struct ComplementarityPoint {
  double P = 0.0;
  double Q = 0.0;
  double T = 0.0;
  double B = 0.0;

  double sum() const { return P + Q; }
};

WitnessReport witness_value(const ThermalSystem& system, double T);

// State-based path: chi_bar is taken as variance_sum / T.
WitnessReport witness_value(const DensityMatrix& state, const LatticeSpec& lattice, double T);
WitnessReport witness_value(const PureState& state, const LatticeSpec& lattice, double T);

// chi_z < N s / (3T); with n_sites = 1 this is the per-site test s/(3T).
bool isotropic_criterion(double chi_z, double T, int n_sites, SpinLength spin);

// Bisection on the witness margin over [T_lo, T_hi] until the bracket is
// narrower than tol. Throws ErrorCode::no_crossing without a sign change.
double critical_temperature(const ThermalSystem& system, double T_lo, double T_hi, double tol);
double critical_temperature(const ModelSpec& model, double T_lo, double T_hi, double tol,
                            ThermalTolerances tolerances = {});

ComplementarityPoint complementarity(const ThermalSystem& system, double T, double B = 0.0);
ComplementarityPoint complementarity(const DensityMatrix& state, const LatticeSpec& lattice);
ComplementarityPoint complementarity(const PureState& state, const LatticeSpec& lattice);

// <M^2> - ((Ns+1)/(Ns)) <M>^2, non-negative for every physical state.
double m2_inequality_margin(const DensityMatrix& state, const LatticeSpec& lattice);
double m2_inequality_margin(const PureState& state, const LatticeSpec& lattice);

// Lowest temperature in [T_lo, T_hi] (to tol) above which the thermal
// concurrence between sites i and j is zero. Requires C(T_lo) > 0 = C(T_hi).
double concurrence_vanishing_temperature(const ThermalSystem& system, int i, int j, double T_lo, double T_hi,
                                         double tol);

}  // namespace spinwit
