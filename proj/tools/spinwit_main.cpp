#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinwit/blas_guard.hpp"
#include "spinwit/spinwit.h"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kConfigError = 2, kResourceCap = 3 };

int exit_code(sw_status status) {
  switch (status) {
    case SW_OK: return kOk;
    case SW_ERR_RESOURCE_CAP: return kResourceCap;
    case SW_ERR_NUMERICAL:
    case SW_ERR_VALIDATION:
    case SW_ERR_INTERNAL: return kValidationFailed;
    default: return kConfigError;
  }
}

int report(sw_status status) {
  std::cerr << "spinwit: " << sw_status_name(status) << ": " << sw_last_error() << "\n";
  return exit_code(status);
}

struct BufferDeleter {
  void operator()(sw_buffer* b) const { sw_buffer_destroy(b); }
};
struct ConfigDeleter {
  void operator()(sw_config* c) const { sw_config_destroy(c); }
};
using Buffer = std::unique_ptr<sw_buffer, BufferDeleter>;
using Config = std::unique_ptr<sw_config, ConfigDeleter>;

int write_output(const sw_buffer* buffer, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(sw_buffer_data(buffer), 1, sw_buffer_size(buffer), stdout);
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  file.write(sw_buffer_data(buffer), static_cast<std::streamsize>(sw_buffer_size(buffer)));
  if (!file) {
    std::cerr << "spinwit: io: cannot write '" << path << "'\n";
    return kConfigError;
  }
  return kOk;
}

struct Common {
  std::string config_path;
  std::string out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
};

int run_command(const std::string& command, const Common& opts) {
  sw_config* raw = nullptr;
  if (sw_status s = sw_config_load(opts.config_path.c_str(), &raw); s != SW_OK) return report(s);
  Config config(raw);
  if (!opts.out.empty())
    if (sw_status s = sw_config_set_output(config.get(), opts.out.c_str()); s != SW_OK) return report(s);
  if (opts.format)
    if (sw_status s = sw_config_set_format(config.get(), opts.format->c_str()); s != SW_OK) return report(s);
  if (opts.seed)
    if (sw_status s = sw_config_set_seed(config.get(), *opts.seed); s != SW_OK) return report(s);
  if (opts.workers)
    if (sw_status s = sw_config_set_workers(config.get(), *opts.workers); s != SW_OK) return report(s);

  sw_buffer* out = nullptr;
  if (sw_status s = sw_run(config.get(), command.c_str(), &out); s != SW_OK) return report(s);
  Buffer buffer(out);
  return write_output(buffer.get(), sw_config_output(config.get()));
}

}  // namespace

int main(int argc, char** argv) {
  spinwit::ensure_safe_blas_kernel(argv);
  CLI::App app{"Thermal entanglement witnesses for Heisenberg spin models"};
  app.set_version_flag("--version", std::string(sw_version()));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "run configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", common.out, "output file (default: config output path, else stdout)");
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", common.seed, "seed recorded with the run");
    sub->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  const char* commands[][2] = {
      {"sweep-temperature", "witness and susceptibilities versus temperature"},
      {"sweep-field", "P, Q and magnetization versus field at fixed temperature"},
      {"grid", "P + Q over a (B, T) grid"},
      {"critical-temperature", "bisect the witness crossing temperature"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

  sw_validate_options vopt;
  sw_validate_options_default(&vopt);
  std::optional<int> samples;
  std::string validate_out;
  CLI::App* validate = app.add_subcommand("validate", "run the oracle and invariant suite");
  validate->add_option("--seed", vopt.seed, "base seed")->capture_default_str();
  validate->add_option("--samples", samples, "sample count for each randomized check")->check(CLI::PositiveNumber);
  validate->add_option("--bound-offset", vopt.bound_offset, "shift the separable bound (negative control)");
  validate->add_option("--out", validate_out, "report file (default: stdout)");
  validate->add_option("--format", common.format, "json only")->check(CLI::IsMember({"json"}));
  validate->add_option("--workers", common.workers, "accepted for symmetry; the suite runs serially")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (validate->parsed()) {
    if (samples) {
      vopt.separable_samples = vopt.haar_samples = *samples;
      vopt.density_samples = std::max(1, *samples / 10);
      vopt.rotation_samples = std::max(1, *samples / 50);
    }
    sw_buffer* out = nullptr;
    int passed = 0;
    if (sw_status s = sw_validate(&vopt, &out, &passed); s != SW_OK) return report(s);
    Buffer buffer(out);
    if (int code = write_output(buffer.get(), validate_out); code != kOk) return code;
    if (!passed) {
      std::cerr << "spinwit: validation failed\n";
      return kValidationFailed;
    }
    return kOk;
  }

  for (CLI::App* sub : app.get_subcommands()) return run_command(sub->get_name(), common);
  return kConfigError;
}
