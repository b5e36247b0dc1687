#ifndef SPINWIT_H
#define SPINWIT_H

/* C interface to the spinwit library. Every fallible call returns an
 * sw_status; on failure sw_last_error() describes the problem (per thread,
 * valid until the next failing call on that thread). Handles are opaque and
 * owned by the caller; destroy functions accept NULL. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SW_API __declspec(dllexport)
#else
#define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_INVALID_ARGUMENT = 1,
  SW_ERR_DIMENSION_MISMATCH = 2,
  SW_ERR_INDEX_OUT_OF_RANGE = 3,
  SW_ERR_NUMERICAL = 4,
  SW_ERR_NO_CROSSING = 5,
  SW_ERR_CONFIG = 6,
  SW_ERR_RESOURCE_CAP = 7,
  SW_ERR_VALIDATION = 8,
  SW_ERR_IO = 9,
  SW_ERR_INTERNAL = 10
} sw_status;

typedef enum sw_axis { SW_AXIS_X = 0, SW_AXIS_Y = 1, SW_AXIS_Z = 2 } sw_axis;
typedef enum sw_boundary { SW_BOUNDARY_OPEN = 0, SW_BOUNDARY_PERIODIC = 1 } sw_boundary;

typedef struct sw_model sw_model;
typedef struct sw_system sw_system;
typedef struct sw_config sw_config;
typedef struct sw_buffer sw_buffer;

typedef struct sw_witness_report {
  double T;
  double chi_bar;
  double bound;  /* N s / T */
  double margin; /* chi_bar - bound; negative means entangled */
  int entangled;
} sw_witness_report;

typedef struct sw_dimer_thermo {
  double T, B, J;
  double logZ;
  double m_z;
  double var_x, var_y, var_z;
  double chi_bar_times_T;
  double P, Q;
} sw_dimer_thermo;

typedef struct sw_validate_options {
  uint64_t seed;
  int separable_samples;
  int haar_samples;
  int density_samples;
  int rotation_samples;
  double bound_offset;
} sw_validate_options;

SW_API const char* sw_version(void);
SW_API const char* sw_last_error(void);
SW_API const char* sw_status_name(sw_status status);

/* Models. two_s is twice the spin length (1 for spin-1/2). */
SW_API sw_status sw_model_xxx_chain(int n_sites, int two_s, double J, sw_boundary boundary, sw_model** out);
SW_API sw_status sw_model_dimer_chain(int n_dimers, double J, double B, int pauli_convention, sw_model** out);
SW_API sw_status sw_model_heisenberg(int n_sites, int two_s, const int* site_i, const int* site_j,
                                     const double* J, size_t n_couplings, sw_model** out);
SW_API sw_status sw_model_set_field(sw_model* model, double B, sw_axis axis);
SW_API sw_status sw_model_hilbert_dim(const sw_model* model, int64_t* out);
SW_API void sw_model_destroy(sw_model* model);

/* A system is a diagonalized model; creating one runs the eigensolver. */
SW_API sw_status sw_system_create(const sw_model* model, sw_system** out);
SW_API void sw_system_destroy(sw_system* system);
SW_API sw_status sw_system_ground_energy(const sw_system* system, double* out);
/* Copies up to capacity ascending energies; *count receives the full dimension. */
SW_API sw_status sw_system_energies(const sw_system* system, double* out, size_t capacity, size_t* count);

SW_API sw_status sw_witness(const sw_system* system, double T, sw_witness_report* out);
SW_API sw_status sw_magnetization(const sw_system* system, double T, double out[3]);
SW_API sw_status sw_susceptibilities(const sw_system* system, double T, double out[3]);
SW_API sw_status sw_complementarity(const sw_system* system, double T, double* P, double* Q);
/* Thermal concurrence of spin-1/2 sites i and j. */
SW_API sw_status sw_pair_concurrence(const sw_system* system, double T, int i, int j, double* out);

SW_API sw_status sw_critical_temperature(const sw_model* model, double T_lo, double T_hi, double tol, double* out);
SW_API sw_status sw_dimer_closed_form(double J, double B, double T, sw_dimer_thermo* out);

/* Run configuration. */
SW_API sw_status sw_config_load(const char* path, sw_config** out);
SW_API sw_status sw_config_parse(const char* text, sw_config** out);
SW_API void sw_config_destroy(sw_config* config);
SW_API sw_status sw_config_set_output(sw_config* config, const char* path);
SW_API sw_status sw_config_set_format(sw_config* config, const char* format);
SW_API sw_status sw_config_set_seed(sw_config* config, uint64_t seed);
SW_API sw_status sw_config_set_workers(sw_config* config, int workers);
/* Output path from the config, "" if none. Valid while config lives. */
SW_API const char* sw_config_output(const sw_config* config);

/* command: "sweep-temperature", "sweep-field", "grid" or "critical-temperature".
 * The rendered CSV/JSON goes into *out. */
SW_API sw_status sw_run(const sw_config* config, const char* command, sw_buffer** out);

SW_API void sw_validate_options_default(sw_validate_options* options);
/* Writes the JSON report into *out and sets *all_passed. A failed check is
 * not an error status; the caller decides. */
SW_API sw_status sw_validate(const sw_validate_options* options, sw_buffer** out, int* all_passed);

SW_API const char* sw_buffer_data(const sw_buffer* buffer);
SW_API size_t sw_buffer_size(const sw_buffer* buffer);
SW_API void sw_buffer_destroy(sw_buffer* buffer);

#ifdef __cplusplus
}
#endif

#endif
