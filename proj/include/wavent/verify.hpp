#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavent/entropy.hpp"

namespace wavent {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed deviation (or violation margin)
  double tolerance = 0.0;  // threshold the deviation was held to
  std::string detail;      // where the worst deviation occurred
};

struct VerifyOptions {
  /// Replaces the tolerance of the entropy-difference properties when > 0.
  double tolerance = 0.0;
  std::uint64_t seed = 20240611;
  int random_signals = 100;
};

/// Every invariant of the library, evaluated on the catalog and filter registry.
std::vector<CheckResult> run_property_suite(const VerifyOptions& opt = {});

/// Doubling each default grid moves every reported entropy by less than its
/// error estimate. One result per wavelet.
std::vector<CheckResult> convergence_checks(double log_base = kShannonBase);

/// Catalog wavelets at their default parameters plus the table's cdeo orders.
std::vector<WaveletSpec> reference_wavelets();

}  // namespace wavent
