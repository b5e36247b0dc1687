#include "spinwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

WitnessReport make_report(double T, double chi_bar, const LatticeSpec& lattice) {
  require(std::isfinite(T) && T > 0.0, ErrorCode::invalid_argument, "witness needs T > 0");
  WitnessReport r;
  r.T = T;
  r.chi_bar = chi_bar;
  r.bound = lattice.total_spin() / T;
  r.margin = chi_bar - r.bound;
  r.entangled = r.margin < 0.0;
  return r;
}

ComplementarityPoint make_point(double variance_total, const MagnetizationVector& m, const LatticeSpec& lattice) {
  const double ns = lattice.total_spin();
  ComplementarityPoint c;
  c.Q = 1.0 - variance_total / ns;
  c.P = m.norm_squared() / (ns * ns);
  return c;
}

double second_moment_total(const DensityMatrix& state, const LatticeSpec& lattice) {
  double total = 0.0;
  for (Axis axis : kAxes) {
    const OperatorMatrix m = total_component(axis, lattice);
    total += expectation(state, OperatorMatrix(m * m)).real();
  }
  return total;
}

double second_moment_total(const PureState& state, const LatticeSpec& lattice) {
  double total = 0.0;
  for (Axis axis : kAxes) total += (total_component_sparse(axis, lattice) * state.amplitudes()).squaredNorm();
  return total;
}

double m2_margin(double second_moment, const MagnetizationVector& m, const LatticeSpec& lattice) {
  const double ns = lattice.total_spin();
  return second_moment - ((ns + 1.0) / ns) * m.norm_squared();
}

void check_bracket(double T_lo, double T_hi, double tol) {
  require(std::isfinite(T_lo) && std::isfinite(T_hi) && T_lo > 0.0 && T_lo < T_hi, ErrorCode::invalid_argument,
          "temperature bracket must satisfy 0 < T_lo < T_hi");
  require(tol > 0.0, ErrorCode::invalid_argument, "bisection tolerance must be > 0");
}

}  // namespace

WitnessReport witness_value(const ThermalSystem& system, double T) {
  return make_report(T, susceptibilities(system, T).total(), system.lattice());
}

WitnessReport witness_value(const DensityMatrix& state, const LatticeSpec& lattice, double T) {
  return make_report(T, variance_sum(state, lattice) / T, lattice);
}

WitnessReport witness_value(const PureState& state, const LatticeSpec& lattice, double T) {
  return make_report(T, variance_sum(state, lattice) / T, lattice);
}

bool isotropic_criterion(double chi_z, double T, int n_sites, SpinLength spin) {
  return chi_z < n_sites * spin.value() / (3.0 * T);
}

double critical_temperature(const ThermalSystem& system, double T_lo, double T_hi, double tol) {
  check_bracket(T_lo, T_hi, tol);
  double lo = T_lo, hi = T_hi;
  const bool lo_entangled = witness_value(system, lo).margin < 0.0;
  const bool hi_entangled = witness_value(system, hi).margin < 0.0;
  require(lo_entangled != hi_entangled, ErrorCode::no_crossing,
          "no crossing in bracket [" + std::to_string(T_lo) + ", " + std::to_string(T_hi) + "]");
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if ((witness_value(system, mid).margin < 0.0) == lo_entangled)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double critical_temperature(const ModelSpec& model, double T_lo, double T_hi, double tol,
                            ThermalTolerances tolerances) {
  check_bracket(T_lo, T_hi, tol);
  return critical_temperature(ThermalSystem::from_model(model, tolerances), T_lo, T_hi, tol);
}

ComplementarityPoint complementarity(const ThermalSystem& system, double T, double B) {
  require(std::isfinite(T) && T > 0.0, ErrorCode::invalid_argument, "complementarity needs T > 0");
  double variance_total = 0.0;
  for (Axis axis : kAxes) variance_total += magnetization_variance(system, T, axis);
  ComplementarityPoint c = make_point(variance_total, magnetization_vector(system, T), system.lattice());
  c.T = T;
  c.B = B;
  return c;
}

ComplementarityPoint complementarity(const DensityMatrix& state, const LatticeSpec& lattice) {
  return make_point(variance_sum(state, lattice), magnetization_vector(state, lattice), lattice);
}

ComplementarityPoint complementarity(const PureState& state, const LatticeSpec& lattice) {
  return make_point(variance_sum(state, lattice), magnetization_vector(state, lattice), lattice);
}

double m2_inequality_margin(const DensityMatrix& state, const LatticeSpec& lattice) {
  return m2_margin(second_moment_total(state, lattice), magnetization_vector(state, lattice), lattice);
}

double m2_inequality_margin(const PureState& state, const LatticeSpec& lattice) {
  return m2_margin(second_moment_total(state, lattice), magnetization_vector(state, lattice), lattice);
}

double concurrence_vanishing_temperature(const ThermalSystem& system, int i, int j, double T_lo, double T_hi,
                                         double tol) {
  check_bracket(T_lo, T_hi, tol);
  const int lo_site = std::min(i, j), hi_site = std::max(i, j);
  require(lo_site != hi_site, ErrorCode::invalid_argument, "concurrence needs two distinct sites");
  require(system.lattice().spin().two_s == 1, ErrorCode::invalid_argument, "concurrence needs spin-1/2 sites");
  const int keep[] = {lo_site, hi_site};
  const auto reductions = eigenstate_reductions(system.spectrum(), system.lattice(), keep);
  auto entangled = [&](double T) {
    return concurrence(thermal_reduced_density_matrix(reductions, system.weights(T))) > 0.0;
  };
  double lo = T_lo, hi = T_hi;
  require(entangled(lo) && !entangled(hi), ErrorCode::no_crossing,
          "concurrence does not vanish inside [" + std::to_string(T_lo) + ", " + std::to_string(T_hi) + "]");
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace spinwit
