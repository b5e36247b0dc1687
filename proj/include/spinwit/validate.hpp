#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinwit {

struct ValidationOptions {
  std::uint64_t seed = 20061016;
  int separable_samples = 10000;  // per (N, s) lattice
  int haar_samples = 10000;
  int density_samples = 1000;
  int rotation_samples = 200;
  // Added to the separable bound N s. Nonzero values exist only as a negative
  // control: the suite must then fail.
  double bound_offset = 0.0;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  long long trials = 0;
  long long violations = 0;
  double worst = 0.0;  // check-specific worst-case slack (negative = violated)
  std::string detail;
  std::uint64_t seed = 0;  // reproduces the first violation, if any
};

struct ValidationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // Deterministic for fixed options: no timings, fixed key order, 12 digits.
  std::string to_json() const;
};

// Oracle equivalence, separable bound sampling, <M^2> inequality sampling,
// complementarity and rotation-invariance checks.
ValidationReport run_validation(const ValidationOptions& options);

}  // namespace spinwit
