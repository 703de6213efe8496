#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavent/catalog.hpp"

namespace wavent::reference {

/// Reference time/frequency entropy row: H_t, H_f, H_t*H_f, H_t+H_f.
struct EntropyRow {
  std::string label;
  std::string wavelet_id;
  ParamMap params;
  double h_time;
  double h_freq;
  double product;
  double h_global;
  std::string note;
};

/// Reference MRA entropy; `family` empty for rows outside the filter registry.
struct MraRow {
  std::string label;
  std::string family;
  int order;
  double h_mra;
  bool reproducible;
};

struct TemperatureRow {
  std::string wavelet_id;
  double temperature;
};

const std::vector<EntropyRow>& entropy_table();
const std::vector<MraRow>& mra_table();
const std::vector<TemperatureRow>& temperature_table();

/// log2(sqrt(pi e)): time and frequency entropy of the unit-variance Gabor logon.
double gaussian_logon_entropy();

/// Reference H_MRA(db2) to eight decimals.
inline constexpr double kDb2MraEntropy = 1.16585703;

const EntropyRow* find_entropy_row(const std::string& label);

}  // namespace wavent::reference
