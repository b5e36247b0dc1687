#include "spinwit/spinwit.h"

#include <algorithm>
#include <new>
#include <string>

#include "spinwit/config.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/observables.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/runs.hpp"
#include "spinwit/validate.hpp"
#include "spinwit/witness.hpp"

struct sw_model {
  spinwit::ModelSpec spec;
};

struct sw_system {
  spinwit::ModelSpec spec;
  spinwit::ThermalSystem system;
};

struct sw_config {
  spinwit::RunConfig config;
};

struct sw_buffer {
  std::string text;
};

namespace {

thread_local std::string last_error;

sw_status to_status(spinwit::ErrorCode code) {
  using spinwit::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SW_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return SW_ERR_DIMENSION_MISMATCH;
    case ErrorCode::index_out_of_range: return SW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::numerical: return SW_ERR_NUMERICAL;
    case ErrorCode::no_crossing: return SW_ERR_NO_CROSSING;
    case ErrorCode::config: return SW_ERR_CONFIG;
    case ErrorCode::resource_cap: return SW_ERR_RESOURCE_CAP;
    case ErrorCode::validation: return SW_ERR_VALIDATION;
    case ErrorCode::io: return SW_ERR_IO;
  }
  return SW_ERR_INTERNAL;
}

sw_status fail_with(sw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
sw_status guarded(Body&& body) {
  try {
    body();
    return SW_OK;
  } catch (const spinwit::Error& e) {
    return fail_with(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(SW_ERR_RESOURCE_CAP, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(SW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(SW_ERR_INTERNAL, "unknown error");
  }
}

#define SW_REQUIRE_ARG(ptr)                                                         \
  do {                                                                              \
    if (!(ptr)) return fail_with(SW_ERR_INVALID_ARGUMENT, #ptr " must not be NULL"); \
  } while (0)

spinwit::Axis to_axis(sw_axis axis) {
  switch (axis) {
    case SW_AXIS_X: return spinwit::Axis::x;
    case SW_AXIS_Y: return spinwit::Axis::y;
    case SW_AXIS_Z: return spinwit::Axis::z;
  }
  spinwit::fail(spinwit::ErrorCode::invalid_argument, "unknown axis");
}

spinwit::Boundary to_boundary(sw_boundary boundary) {
  switch (boundary) {
    case SW_BOUNDARY_OPEN: return spinwit::Boundary::open;
    case SW_BOUNDARY_PERIODIC: return spinwit::Boundary::periodic;
  }
  spinwit::fail(spinwit::ErrorCode::invalid_argument, "unknown boundary");
}

sw_status emit(std::string text, sw_buffer** out) {
  *out = new sw_buffer{std::move(text)};
  return SW_OK;
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "0.1.0"; }

const char* sw_last_error(void) { return last_error.c_str(); }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "ok";
    case SW_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SW_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SW_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case SW_ERR_NUMERICAL: return "numerical";
    case SW_ERR_NO_CROSSING: return "no_crossing";
    case SW_ERR_CONFIG: return "config";
    case SW_ERR_RESOURCE_CAP: return "resource_cap";
    case SW_ERR_VALIDATION: return "validation";
    case SW_ERR_IO: return "io";
    case SW_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

sw_status sw_model_xxx_chain(int n_sites, int two_s, double J, sw_boundary boundary, sw_model** out) {
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new sw_model{spinwit::ModelSpec::xxx_chain(n_sites, spinwit::SpinLength{two_s}, J, to_boundary(boundary))};
  });
}

sw_status sw_model_dimer_chain(int n_dimers, double J, double B, int pauli_convention, sw_model** out) {
  SW_REQUIRE_ARG(out);
  return guarded([&] { *out = new sw_model{spinwit::ModelSpec::dimer_chain(n_dimers, J, B, pauli_convention != 0)}; });
}

sw_status sw_model_heisenberg(int n_sites, int two_s, const int* site_i, const int* site_j, const double* J,
                              size_t n_couplings, sw_model** out) {
  SW_REQUIRE_ARG(out);
  if (n_couplings > 0 && (!site_i || !site_j || !J))
    return fail_with(SW_ERR_INVALID_ARGUMENT, "coupling arrays must not be NULL");
  return guarded([&] {
    std::vector<spinwit::Coupling> couplings;
    couplings.reserve(n_couplings);
    for (size_t k = 0; k < n_couplings; ++k) couplings.push_back({site_i[k], site_j[k], J[k]});
    *out = new sw_model{
        spinwit::ModelSpec::heisenberg(spinwit::LatticeSpec(n_sites, spinwit::SpinLength{two_s}, couplings))};
  });
}

sw_status sw_model_set_field(sw_model* model, double B, sw_axis axis) {
  SW_REQUIRE_ARG(model);
  return guarded([&] { model->spec = model->spec.with_field(B, to_axis(axis)); });
}

sw_status sw_model_hilbert_dim(const sw_model* model, int64_t* out) {
  SW_REQUIRE_ARG(model);
  SW_REQUIRE_ARG(out);
  *out = static_cast<int64_t>(model->spec.lattice.hilbert_dim());
  return SW_OK;
}

void sw_model_destroy(sw_model* model) { delete model; }

sw_status sw_system_create(const sw_model* model, sw_system** out) {
  SW_REQUIRE_ARG(model);
  SW_REQUIRE_ARG(out);
  return guarded([&] { *out = new sw_system{model->spec, spinwit::ThermalSystem::from_model(model->spec)}; });
}

void sw_system_destroy(sw_system* system) { delete system; }

sw_status sw_system_ground_energy(const sw_system* system, double* out) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(out);
  *out = system->system.spectrum().ground_energy();
  return SW_OK;
}

sw_status sw_system_energies(const sw_system* system, double* out, size_t capacity, size_t* count) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(count);
  if (capacity > 0 && !out) return fail_with(SW_ERR_INVALID_ARGUMENT, "out must not be NULL");
  const auto& energies = system->system.spectrum().energies();
  *count = static_cast<size_t>(energies.size());
  std::copy_n(energies.data(), std::min(capacity, *count), out);
  return SW_OK;
}

sw_status sw_witness(const sw_system* system, double T, sw_witness_report* out) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    const auto w = spinwit::witness_value(system->system, T);
    *out = sw_witness_report{w.T, w.chi_bar, w.bound, w.margin, w.entangled ? 1 : 0};
  });
}

sw_status sw_magnetization(const sw_system* system, double T, double out[3]) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    const auto m = spinwit::magnetization_vector(system->system, T);
    out[0] = m.x;
    out[1] = m.y;
    out[2] = m.z;
  });
}

sw_status sw_susceptibilities(const sw_system* system, double T, double out[3]) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    const auto chi = spinwit::susceptibilities(system->system, T);
    out[0] = chi.chi_x;
    out[1] = chi.chi_y;
    out[2] = chi.chi_z;
  });
}

sw_status sw_complementarity(const sw_system* system, double T, double* P, double* Q) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(P);
  SW_REQUIRE_ARG(Q);
  return guarded([&] {
    const auto c = spinwit::complementarity(system->system, T, system->spec.B);
    *P = c.P;
    *Q = c.Q;
  });
}

sw_status sw_pair_concurrence(const sw_system* system, double T, int i, int j, double* out) {
  SW_REQUIRE_ARG(system);
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    const auto& lattice = system->system.lattice();
    spinwit::require(lattice.spin().two_s == 1, spinwit::ErrorCode::invalid_argument,
                     "concurrence needs spin-1/2 sites");
    spinwit::require(i != j, spinwit::ErrorCode::invalid_argument, "concurrence needs two distinct sites");
    const int keep[] = {std::min(i, j), std::max(i, j)};
    const auto reductions = spinwit::eigenstate_reductions(system->system.spectrum(), lattice, keep);
    *out = spinwit::concurrence(spinwit::thermal_reduced_density_matrix(reductions, system->system.weights(T)));
  });
}

sw_status sw_critical_temperature(const sw_model* model, double T_lo, double T_hi, double tol, double* out) {
  SW_REQUIRE_ARG(model);
  SW_REQUIRE_ARG(out);
  return guarded([&] { *out = spinwit::critical_temperature(model->spec, T_lo, T_hi, tol); });
}

sw_status sw_dimer_closed_form(double J, double B, double T, sw_dimer_thermo* out) {
  SW_REQUIRE_ARG(out);
  return guarded([&] {
    const auto d = spinwit::oracle::dimer_closed_form(J, B, T);
    *out = sw_dimer_thermo{d.T,     d.B,     d.J,     d.logZ,          d.m_z, d.var_x,
                           d.var_y, d.var_z, d.chi_bar_times_T, d.P, d.Q};
  });
}

sw_status sw_config_load(const char* path, sw_config** out) {
  SW_REQUIRE_ARG(path);
  SW_REQUIRE_ARG(out);
  return guarded([&] { *out = new sw_config{spinwit::load_config(path)}; });
}

sw_status sw_config_parse(const char* text, sw_config** out) {
  SW_REQUIRE_ARG(text);
  SW_REQUIRE_ARG(out);
  return guarded([&] { *out = new sw_config{spinwit::parse_config(text)}; });
}

void sw_config_destroy(sw_config* config) { delete config; }

sw_status sw_config_set_output(sw_config* config, const char* path) {
  SW_REQUIRE_ARG(config);
  SW_REQUIRE_ARG(path);
  config->config.output_path = path;
  return SW_OK;
}

sw_status sw_config_set_format(sw_config* config, const char* format) {
  SW_REQUIRE_ARG(config);
  SW_REQUIRE_ARG(format);
  return guarded([&] { config->config.format = spinwit::parse_output_format(format); });
}

sw_status sw_config_set_seed(sw_config* config, uint64_t seed) {
  SW_REQUIRE_ARG(config);
  config->config.seed = seed;
  return SW_OK;
}

sw_status sw_config_set_workers(sw_config* config, int workers) {
  SW_REQUIRE_ARG(config);
  if (workers < 1) return fail_with(SW_ERR_CONFIG, "workers must be >= 1");
  config->config.workers = workers;
  return SW_OK;
}

const char* sw_config_output(const sw_config* config) { return config ? config->config.output_path.c_str() : ""; }

sw_status sw_run(const sw_config* config, const char* command, sw_buffer** out) {
  SW_REQUIRE_ARG(config);
  SW_REQUIRE_ARG(command);
  SW_REQUIRE_ARG(out);
  const std::string cmd = command;
  const spinwit::RunConfig& cfg = config->config;
  return guarded([&] {
    using spinwit::SweepKind;
    auto expect_sweep = [&](SweepKind kind) {
      spinwit::require(!cfg.sweep || *cfg.sweep == kind, spinwit::ErrorCode::config,
                       "config declares sweep kind '" + std::string(spinwit::sweep_kind_name(*cfg.sweep)) +
                           "' but command is '" + cmd + "'");
    };
    if (cmd == "sweep-temperature") {
      expect_sweep(SweepKind::temperature);
      emit(spinwit::render_temperature(cfg, spinwit::sweep_temperature(cfg)), out);
    } else if (cmd == "sweep-field") {
      expect_sweep(SweepKind::field);
      emit(spinwit::render_field(cfg, spinwit::sweep_field(cfg)), out);
    } else if (cmd == "grid") {
      expect_sweep(SweepKind::grid);
      emit(spinwit::render_grid(cfg, spinwit::sweep_grid(cfg)), out);
    } else if (cmd == "critical-temperature") {
      emit(spinwit::render_critical(cfg, spinwit::find_critical_temperature(cfg)), out);
    } else {
      spinwit::fail(spinwit::ErrorCode::invalid_argument, "unknown command '" + cmd + "'");
    }
  });
}

void sw_validate_options_default(sw_validate_options* options) {
  if (!options) return;
  const spinwit::ValidationOptions d;
  *options = sw_validate_options{d.seed,          d.separable_samples, d.haar_samples,
                                 d.density_samples, d.rotation_samples, d.bound_offset};
}

sw_status sw_validate(const sw_validate_options* options, sw_buffer** out, int* all_passed) {
  SW_REQUIRE_ARG(out);
  SW_REQUIRE_ARG(all_passed);
  return guarded([&] {
    spinwit::ValidationOptions opt;
    if (options) {
      spinwit::require(options->separable_samples >= 1 && options->haar_samples >= 1 &&
                           options->density_samples >= 1 && options->rotation_samples >= 1,
                       spinwit::ErrorCode::invalid_argument, "sample counts must be >= 1");
      opt.seed = options->seed;
      opt.separable_samples = options->separable_samples;
      opt.haar_samples = options->haar_samples;
      opt.density_samples = options->density_samples;
      opt.rotation_samples = options->rotation_samples;
      opt.bound_offset = options->bound_offset;
    }
    const auto report = spinwit::run_validation(opt);
    *all_passed = report.all_passed() ? 1 : 0;
    emit(report.to_json(), out);
  });
}

const char* sw_buffer_data(const sw_buffer* buffer) { return buffer ? buffer->text.c_str() : ""; }

size_t sw_buffer_size(const sw_buffer* buffer) { return buffer ? buffer->text.size() : 0; }

void sw_buffer_destroy(sw_buffer* buffer) { delete buffer; }

}  // extern "C"
