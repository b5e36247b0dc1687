#include "spinwit/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "spinwit/errors.hpp"

namespace spinwit::oracle {

DimerThermo dimer_closed_form(double J, double B, double T) {
  require(std::isfinite(T) && T > 0.0, ErrorCode::invalid_argument, "dimer oracle needs T > 0");
  const double e_singlet = -3.0 * J;
  const double e_up = J + 2.0 * B;    // m = +1
  const double e_zero = J;            // m = 0
  const double e_down = J - 2.0 * B;  // m = -1
  const double e_min = std::min({e_singlet, e_up, e_zero, e_down});

  const double w_singlet = std::exp(-(e_singlet - e_min) / T);
  const double w_up = std::exp(-(e_up - e_min) / T);
  const double w_zero = std::exp(-(e_zero - e_min) / T);
  const double w_down = std::exp(-(e_down - e_min) / T);
  const double z = w_singlet + w_up + w_zero + w_down;
  const double p_up = w_up / z, p_zero = w_zero / z, p_down = w_down / z;

  DimerThermo d;
  d.T = T;
  d.B = B;
  d.J = J;
  d.logZ = -e_min / T + std::log(z);
  d.m_z = p_up - p_down;
  d.var_z = (p_up + p_down) - d.m_z * d.m_z;
  // Triplet |1,m>: <M_x^2> = (2 - m^2)/2; singlet contributes nothing. <M_x> = 0.
  d.var_x = 0.5 * p_up + p_zero + 0.5 * p_down;
  d.var_y = d.var_x;
  d.chi_bar_times_T = d.var_x + d.var_y + d.var_z;
  d.Q = 1.0 - d.chi_bar_times_T;
  d.P = d.m_z * d.m_z;
  return d;
}

double dimer_witness_critical_temperature(double J) { return 4.0 * J / std::log(3.0); }

double curie_law(SpinLength spin, double T) {
  require(T > 0.0, ErrorCode::invalid_argument, "Curie law needs T > 0");
  const double s = spin.value();
  return s * (s + 1.0) / (3.0 * T);
}

double two_level_magnetization(double B, double T) {
  if (T == 0.0) return B > 0.0 ? -0.5 : B < 0.0 ? 0.5 : 0.0;
  require(T > 0.0, ErrorCode::invalid_argument, "two-level oracle needs T >= 0");
  return -0.5 * std::tanh(B / (2.0 * T));
}

}  // namespace spinwit::oracle
