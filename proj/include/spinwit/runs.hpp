#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spinwit/config.hpp"
#include "spinwit/observables.hpp"
#include "spinwit/witness.hpp"

namespace spinwit {

inline constexpr int kSchemaVersion = 1;

// Spectra keyed by (model fingerprint, B); each key is diagonalized once
// even under concurrent requests.
class SpectrumCache {
 public:
  std::shared_ptr<const ThermalSystem> get(const ModelSpec& model, const ThermalTolerances& tolerances);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_future<std::shared_ptr<const ThermalSystem>>> entries_;
};

struct TemperatureRow {
  double T = 0.0;
  SusceptibilityTriple chi;
  double chi_bar = 0.0;
  double per_site_chi = 0.0;        // chi_z / N
  double per_site_threshold = 0.0;  // s / (3T)
  double bound = 0.0;               // N s / T
  double margin = 0.0;
  bool entangled = false;
};

struct FieldRow {
  double B = 0.0;
  double T = 0.0;
  double P = 0.0;
  double Q = 0.0;
  MagnetizationVector m;
};

struct GridRow {
  double B = 0.0;
  double T = 0.0;
  double P = 0.0;
  double Q = 0.0;
};

struct CriticalReport {
  double T_c = 0.0;
  CriticalSearch search;
  ModelSpec model;
  // Literature / closed-form value this finite system approximates, if any.
  std::optional<double> reference_T_c;
  std::string reference_note;
};

std::vector<TemperatureRow> sweep_temperature(const RunConfig& config);
std::vector<FieldRow> sweep_field(const RunConfig& config, SpectrumCache* cache = nullptr);
std::vector<GridRow> sweep_grid(const RunConfig& config, SpectrumCache* cache = nullptr);
CriticalReport find_critical_temperature(const RunConfig& config);

// Field value in [B_lo, B_hi] (to tol) where the T = 0 magnetization along the
// model's field axis first departs from its value at B_lo, i.e. the ground
// state level crossing.
double locate_level_crossing(const ModelSpec& model, double B_lo, double B_hi, double tol,
                             ThermalTolerances tolerances = {});

// 12 significant digits, "%.12g".
std::string format_number(double value);

std::string render_temperature(const RunConfig& config, const std::vector<TemperatureRow>& rows);
std::string render_field(const RunConfig& config, const std::vector<FieldRow>& rows);
std::string render_grid(const RunConfig& config, const std::vector<GridRow>& rows);
std::string render_critical(const RunConfig& config, const CriticalReport& report);

}  // namespace spinwit
