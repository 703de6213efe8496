#pragma once

#include <span>
#include <string>
#include <utility>

#include "wavent/catalog.hpp"
#include "wavent/filters.hpp"
#include "wavent/transform.hpp"

namespace wavent {

inline constexpr double kShannonBase = 2.0;
inline constexpr double kNaturalBase = 2.718281828459045235360287;

/// A value with its numeric error estimate (same units).
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Renyi order s > 0, s != 1, with the logarithm base used for reporting.
class RenyiOrder {
 public:
  explicit RenyiOrder(double s, double log_base = kShannonBase);
  double s() const { return s_; }
  double log_base() const { return base_; }

 private:
  double s_;
  double base_;
};

/// -integral p log p, 0 log 0 = 0, tail-corrected. Error is
/// max(|H(N) - H(N/2)|, |H(N/2) - H(N/4)|/8) plus tail-model and roundoff bounds.
/// Throws NormalizationError when the density is not unit mass.
Estimate shannon_entropy(const SampledDensity& density, double log_base = kShannonBase);

/// (1/(1-s)) log integral p^s. +inf when the tail makes the integral diverge.
Estimate renyi_entropy(const SampledDensity& density, const RenyiOrder& order);

/// -[integral |f'| log|f'|] / [integral |f'|], f' by cell differences
/// (f_{i+1}-f_i)/step. Throws InvalidArgument when f has zero variation.
double jumarie_entropy(std::span<const double> f, const Grid& grid,
                       double log_base = kShannonBase);

double global_entropy(double h_time, double h_freq);

/// energy / h_global. Throws InvalidArgument for h_global <= 0.
double temperature(double energy, double h_global);

/// (H_t + log|a|, H_f - log|a|) in the given base.
std::pair<double, double> predict_daughter_entropy(double h_time, double h_freq, double a,
                                                   double log_base = kShannonBase);

/// Discrete entropy of squared coefficients; requires sum c^2 = 1 within 1e-10.
double coefficient_entropy(std::span<const double> coeffs, double log_base = kShannonBase);

/// H_MRA from the high-pass taps.
double mra_entropy(const FilterBank& bank, double log_base = kShannonBase);

/// -sum P_j log P_j of relative level energies; natural log by default.
double swt_entropy(std::span<const double> level_energies, double log_base = kNaturalBase);

struct ReportErrors {
  double h_time = 0.0;
  double h_freq = 0.0;
  double h_global = 0.0;
  double product = 0.0;
  double temperature = 0.0;
  double energy = 0.0;
  bool operator==(const ReportErrors&) const = default;
};

struct EntropyReport {
  std::string wavelet_id;
  ParamMap params;
  double log_base = kShannonBase;
  double h_time = 0.0;
  double h_freq = 0.0;
  double h_global = 0.0;
  double product = 0.0;
  double energy = 0.0;
  double temperature = 0.0;
  ReportErrors errors;
  bool operator==(const EntropyReport&) const = default;
};

struct ReportOptions {
  GridOptions time_grid;
  GridOptions freq_grid;
  double log_base = kShannonBase;
};

EntropyReport entropy_report(const WaveletSpec& spec, const ReportOptions& opt = {});

/// Fills the derived fields (global, product, temperature and their errors).
EntropyReport assemble_report(std::string id, ParamMap params, double log_base, Estimate h_time,
                              Estimate h_freq, Estimate energy);

}  // namespace wavent
