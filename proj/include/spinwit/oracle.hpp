#pragma once

#include "spinwit/spin_algebra.hpp"

namespace spinwit::oracle {

// Closed-form thermodynamics of one dimer H = J sigma^1.sigma^2 + B (sigma_z^1 + sigma_z^2)
// with levels {-3J (singlet), J - 2B, J, J + 2B}. Magnetization and variances
// are in spin-operator units, P and Q use N = 2, s = 1/2.
struct DimerThermo {
  double T = 0.0, B = 0.0, J = 0.0;
  double logZ = 0.0;
  double m_z = 0.0;
  double var_x = 0.0, var_y = 0.0, var_z = 0.0;
  double chi_bar_times_T = 0.0;
  double P = 0.0, Q = 0.0;
};

DimerThermo dimer_closed_form(double J, double B, double T);

// Zero-field temperature where T * chi_bar = N s = 1 for one dimer:
// 6 / (exp(4J/T) + 3) = 1, i.e. T = 4J / ln 3.
double dimer_witness_critical_temperature(double J);

// Free-spin zero-field susceptibility per spin along one axis, s(s+1)/(3T).
double curie_law(SpinLength spin, double T);

// <S_z> for H = B S_z on a single spin-1/2.
double two_level_magnetization(double B, double T);

}  // namespace spinwit::oracle
