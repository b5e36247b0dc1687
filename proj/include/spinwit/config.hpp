#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinwit/models.hpp"
#include "spinwit/thermal.hpp"

namespace spinwit {

enum class SweepKind { temperature, field, grid };
enum class Spacing { linear, log };
enum class OutputFormat { csv, json };

std::string_view sweep_kind_name(SweepKind kind);
std::string_view output_format_name(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

struct Range {
  double lo = 0.0;
  double hi = 1.0;
  int n_points = 2;
  Spacing spacing = Spacing::linear;

  // Inclusive grid; log spacing needs lo > 0.
  std::vector<double> points() const;
};

struct CriticalSearch {
  double T_lo = 1.0;
  double T_hi = 2.5;
  double tol = 1e-4;
};

// One config file describes one reproducible run. See docs/config.md.
struct RunConfig {
  ModelSpec model;
  std::optional<SweepKind> sweep;
  Range T_range{0.05, 2.0, 100, Spacing::linear};
  Range B_range{0.0, 4.0, 100, Spacing::linear};
  double field_sweep_T = 0.1;
  CriticalSearch critical;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 1;
  int workers = 1;
  ThermalTolerances tolerances;
};

// Parses the sectioned key = value format. Errors carry ErrorCode::config and
// a "source:line: [section] key: ..." prefix; a lattice over the dimension cap
// keeps ErrorCode::resource_cap.
RunConfig parse_config(std::string_view text, std::string_view source_name = "<config>");
RunConfig load_config(const std::filesystem::path& path);

}  // namespace spinwit
