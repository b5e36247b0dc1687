// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. Pass the config directory as argv[1] to override the
// built-in default.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinwit/blas_guard.hpp"
#include "spinwit/config.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/runs.hpp"
#include "spinwit/spinwit.h"
#include "spinwit/states.hpp"
#include "spinwit/witness.hpp"

using namespace spinwit;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  Stopwatch clock;
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = clock.seconds();
  const bool in_time = elapsed < time_limit;
  const bool ok = out.passed && in_time;
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s; %.2f s (limit %.0f s)%s\n", ok ? "PASS" : "FAIL", id, title, out.detail.c_str(),
              elapsed, time_limit, in_time ? "" : " OVER TIME");
  std::fflush(stdout);
}

std::filesystem::path config_dir;

RunConfig config(const char* name) { return load_config(config_dir / name); }

Outcome dimer_oracle() {
  double worst = 0.0;
  for (double B : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    const ThermalSystem system = ThermalSystem::from_model(ModelSpec::dimer_chain(1, 1.0, B));
    for (double T : {0.05, 0.1, 0.5, 1.0, 2.0}) {
      const oracle::DimerThermo d = oracle::dimer_closed_form(1.0, B, T);
      const ComplementarityPoint c = complementarity(system, T, B);
      for (double diff : {log_partition_function(system.spectrum(), T) - d.logZ,
                          magnetization(system, T, Axis::z) - d.m_z,
                          magnetization_variance(system, T, Axis::x) - d.var_x,
                          magnetization_variance(system, T, Axis::y) - d.var_y,
                          magnetization_variance(system, T, Axis::z) - d.var_z, c.P - d.P, c.Q - d.Q})
        worst = std::max(worst, std::abs(diff));
    }
  }
  return {worst <= 1e-10, fmt("30 points, max |ED - closed form| = %.2e", worst)};
}

Outcome dimer_field_sweep() {
  const RunConfig cfg = config("dimer_field.ini");
  const std::vector<FieldRow> rows = sweep_field(cfg);
  double max_sum = 0.0;
  for (const auto& r : rows) max_sum = std::max(max_sum, r.P + r.Q);
  const double crossing = locate_level_crossing(cfg.model, 0.0, 4.0, 1e-9);
  const bool ok = rows.size() == 200 && cfg.field_sweep_T == 0.1 && rows.front().B == 0.0 &&
                  rows.back().B == 4.0 && rows.front().Q >= 0.99 && rows.back().P >= 0.99 &&
                  max_sum <= 1.0 + 1e-9 && std::abs(crossing - 2.0) <= 1e-6;
  return {ok, fmt("%zu points at T=%g, Q(0)=%.6f, P(4)=%.6f, max(P+Q)=%.12f, crossing B=%.9f", rows.size(),
                  cfg.field_sweep_T, rows.front().Q, rows.back().P, max_sum, crossing)};
}

Outcome dimer_grid() {
  const RunConfig cfg = config("dimer_grid.ini");
  const std::vector<GridRow> rows = sweep_grid(cfg);
  double max_sum = -1.0;
  int over = 0;
  for (const auto& r : rows) {
    max_sum = std::max(max_sum, r.P + r.Q);
    if (r.P + r.Q > 1.0 + 1e-9) ++over;
  }
  const bool ok = rows.size() == 10000 && cfg.workers == 4 && over == 0;
  return {ok, fmt("%zu points, %d workers, max(P+Q)=%.12f, %d above 1+1e-9", rows.size(), cfg.workers, max_sum,
                  over)};
}

struct ChainResult {
  double T_c = 0.0;
  int rows = 0;
  int flagged = 0;
  int mismatched = 0;  // per-site test disagrees with the flag
  int misordered = 0;  // flag disagrees with T < T_c
};

ChainResult examine_chain(const RunConfig& cfg, const ThermalSystem& system) {
  ChainResult out;
  out.T_c = critical_temperature(system, cfg.critical.T_lo, cfg.critical.T_hi, cfg.critical.tol);
  for (const TemperatureRow& row : sweep_temperature(cfg)) {
    ++out.rows;
    if (row.entangled) ++out.flagged;
    if ((row.per_site_chi < row.per_site_threshold) != row.entangled) ++out.mismatched;
    if (std::abs(row.T - out.T_c) > cfg.critical.tol && (row.T < out.T_c) != row.entangled) ++out.misordered;
  }
  return out;
}

std::optional<ThermalSystem> half_chain;
double half_chain_T_c = 0.0;

Outcome chain_crossings() {
  const RunConfig half_cfg = config("chain_half.ini");
  const RunConfig one_cfg = config("chain_one.ini");
  half_chain.emplace(ThermalSystem::from_model(half_cfg.model));
  const ChainResult half = examine_chain(half_cfg, *half_chain);
  half_chain_T_c = half.T_c;
  const ChainResult one = examine_chain(one_cfg, ThermalSystem::from_model(one_cfg.model));

  const bool sizes = half_cfg.model.lattice.n_sites() == 12 && half_cfg.model.lattice.spin().two_s == 1 &&
                     one_cfg.model.lattice.n_sites() == 8 && one_cfg.model.lattice.spin().two_s == 2;
  const bool ok = sizes && half.T_c >= 1.4 && half.T_c <= 1.8 && one.T_c >= 1.7 && one.T_c <= 2.3 &&
                  half.mismatched == 0 && one.mismatched == 0 && half.misordered == 0 && one.misordered == 0 &&
                  half.flagged > 0 && one.flagged > 0;
  return {ok, fmt("N=12 s=1/2 T_c=%.5f (flagged %d/%d, %d mismatches); N=8 s=1 T_c=%.5f (flagged %d/%d, "
                  "%d mismatches)",
                  half.T_c, half.flagged, half.rows, half.mismatched + half.misordered, one.T_c, one.flagged,
                  one.rows, one.mismatched + one.misordered)};
}

Outcome separable_bound() {
  const std::pair<int, int> lattices[] = {{2, 1}, {3, 1}, {4, 1}, {2, 2}};
  int trials = 0, violations = 0;
  double worst = INFINITY;
  std::uint64_t stream = 0;
  for (const auto& [n, two_s] : lattices) {
    const LatticeSpec lattice(n, SpinLength{two_s});
    for (int k = 0; k < 10000; ++k) {
      const std::uint64_t seed = derive_seed(7001, stream++);
      const int terms = 1 + (k / 2) % 4;
      const DensityMatrix rho = (k % 2 == 0) ? random_separable_mixture(lattice, terms, seed)
                                             : random_pure_product_mixture(lattice, terms, seed);
      const double slack = variance_sum(rho, lattice) - lattice.total_spin();
      worst = std::min(worst, slack);
      if (slack < -1e-9) ++violations;
      ++trials;
    }
  }
  return {violations == 0, fmt("%d samples over 4 lattices, %d violations, min slack %.3e", trials, violations, worst)};
}

Outcome m2_inequality() {
  const LatticeSpec lattice(3, SpinLength{1});
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  int violations = 0;
  double worst = INFINITY;
  auto record = [&](double margin) {
    worst = std::min(worst, margin);
    if (margin < -1e-9) ++violations;
  };
  for (int k = 0; k < 10000; ++k) record(m2_inequality_margin(haar_random_pure(dim, derive_seed(7002, k)), lattice));
  for (int k = 0; k < 1000; ++k)
    record(m2_inequality_margin(random_density_matrix(dim, derive_seed(7003, k)), lattice));
  return {violations == 0, fmt("10000 pure + 1000 mixed, %d violations, min margin %.3e", violations, worst)};
}

Outcome susceptibility_consistency() {
  const ModelSpec chain = ModelSpec::xxx_chain(8, SpinLength{1}, 1.0, Boundary::periodic);
  const ThermalSystem system = ThermalSystem::from_model(chain);
  double worst = 0.0;
  std::ostringstream values;
  for (double T : {0.5, 1.0, 2.0}) {
    const double fluct = fluctuation_susceptibility(system, T, Axis::z);
    const double deriv = derivative_susceptibility(chain, T, Axis::z, 1e-3);
    worst = std::max(worst, std::abs(fluct - deriv) / std::abs(fluct));
    values << fmt(" T=%g: %.8f/%.8f", T, fluct, deriv);
  }
  return {worst <= 1e-4, fmt("max relative gap %.2e;", worst) + values.str()};
}

Outcome concurrence_ordering() {
  if (!half_chain) return {false, "criterion 4 did not produce the N=12 system"};
  const double T_conc = concurrence_vanishing_temperature(*half_chain, 0, 1, 0.1, 1.4, 1e-4);
  const double reference = 0.795;
  const bool ok = std::abs(T_conc - reference) <= 0.2 * reference && half_chain_T_c > T_conc;
  return {ok, fmt("nearest-neighbour concurrence vanishes at T=%.5f (window %.3f..%.3f), witness T_c=%.5f", T_conc,
                  0.8 * reference, 1.2 * reference, half_chain_T_c)};
}

Outcome spin_algebra() {
  double worst = 0.0;
  int lattices = 0;
  const Complex i(0.0, 1.0);
  for (int two_s : {1, 2, 3}) {
    const SpinLength spin{two_s};
    const double s = spin.value();
    for (int n = 1; n <= 4; ++n) {
      const LatticeSpec lattice(n, spin);
      const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
      const SpinTriple local = spin_matrices(spin);
      std::vector<SpinTriple> site(n);
      for (int k = 0; k < n; ++k)
        site[k] = {embed(local.x, k, lattice), embed(local.y, k, lattice), embed(local.z, k, lattice)};
      const OperatorMatrix id = OperatorMatrix::Identity(dim, dim);
      for (int k = 0; k < n; ++k) {
        const SpinTriple& S = site[k];
        const OperatorMatrix casimir = S.x * S.x + S.y * S.y + S.z * S.z;
        worst = std::max(worst, (casimir - s * (s + 1) * id).cwiseAbs().maxCoeff());
        worst = std::max(worst, (commutator(S.x, S.y) - i * S.z).cwiseAbs().maxCoeff());
        worst = std::max(worst, (commutator(S.y, S.z) - i * S.x).cwiseAbs().maxCoeff());
        worst = std::max(worst, (commutator(S.z, S.x) - i * S.y).cwiseAbs().maxCoeff());
        for (int l = k + 1; l < n; ++l)
          for (Axis a : kAxes)
            for (Axis b : kAxes) worst = std::max(worst, commutator(S[a], site[l][b]).cwiseAbs().maxCoeff());
      }
      for (Axis a : kAxes) {
        const Eigen::VectorXd levels =
            Eigen::SelfAdjointEigenSolver<OperatorMatrix>(total_component(a, lattice), Eigen::EigenvaluesOnly)
                .eigenvalues();
        worst = std::max(worst, std::abs(levels.maxCoeff() - lattice.total_spin()));
        worst = std::max(worst, std::abs(levels.minCoeff() + lattice.total_spin()));
      }
      const PureState up = all_up_state(lattice);
      worst = std::max(worst, std::abs(expectation(up, total_component(Axis::z, lattice)) - lattice.total_spin()));
      ++lattices;
    }
  }
  return {worst <= 1e-12, fmt("s in {1/2,1,3/2}, N in 1..4 (%d lattices), max deviation %.2e", lattices, worst)};
}

Outcome validate_determinism() {
  sw_validate_options options;
  sw_validate_options_default(&options);
  std::string reports[2];
  int passed[2] = {0, 0};
  for (int k = 0; k < 2; ++k) {
    sw_buffer* buffer = nullptr;
    if (sw_validate(&options, &buffer, &passed[k]) != SW_OK) return {false, std::string("sw_validate: ") + sw_last_error()};
    reports[k].assign(sw_buffer_data(buffer), sw_buffer_size(buffer));
    sw_buffer_destroy(buffer);
  }
  const bool same = reports[0] == reports[1];
  return {same && !reports[0].empty(),
          fmt("seed %llu, two reports of %zu bytes %s (suite %s)", static_cast<unsigned long long>(options.seed),
              reports[0].size(), same ? "identical" : "DIFFER", passed[0] && passed[1] ? "passed" : "failed")};
}

}  // namespace

int main(int argc, char** argv) {
  ensure_safe_blas_kernel(argv);
  config_dir = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path(SPINWIT_CONFIG_DIR);

  Stopwatch total;
  criterion(1, "dimer oracle equivalence", 5, dimer_oracle);
  criterion(2, "dimer field sweep at T=0.1", 30, dimer_field_sweep);
  criterion(3, "dimer (B,T) grid complementarity", 120, dimer_grid);
  criterion(4, "chain witness crossings", 600, chain_crossings);
  criterion(5, "separable variance bound", 120, separable_bound);
  criterion(6, "<M^2> inequality", 60, m2_inequality);
  criterion(7, "fluctuation vs derivative susceptibility", 60, susceptibility_consistency);
  criterion(8, "concurrence threshold below witness T_c", 300, concurrence_ordering);
  criterion(9, "spin algebra properties", 30, spin_algebra);
  criterion(10, "validate determinism", 600, validate_determinism);
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failures, total.seconds());
  return failures == 0 ? 0 : 1;
}
