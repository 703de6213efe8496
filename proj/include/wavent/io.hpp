#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "wavent/entropy.hpp"
#include "wavent/filters.hpp"
#include "wavent/transform.hpp"

namespace wavent {

void to_json(nlohmann::json& j, const Grid& g);
void from_json(const nlohmann::json& j, Grid& g);
void to_json(nlohmann::json& j, const TailModel& t);
void from_json(const nlohmann::json& j, TailModel& t);
void to_json(nlohmann::json& j, const SampledDensity& d);
/// Rebuilds through make_density, so derived mass fields are recomputed.
void from_json(const nlohmann::json& j, SampledDensity& d);
void to_json(nlohmann::json& j, const ReportErrors& e);
void from_json(const nlohmann::json& j, ReportErrors& e);
void to_json(nlohmann::json& j, const EntropyReport& r);
void from_json(const nlohmann::json& j, EntropyReport& r);
void to_json(nlohmann::json& j, const FilterBank& b);
void from_json(const nlohmann::json& j, FilterBank& b);

/// Wavelet catalog and filter registry.
nlohmann::json catalog_manifest();

/// "coordinate,density" header then one row per sample, 17 significant digits.
void write_density_csv(std::ostream& os, const SampledDensity& d);

/// Columns H_t, H_f, H_t*H_f, H_t+H_f at six decimals.
std::string format_report_row(const std::string& label, const EntropyReport& r);

/// One real per line; blank lines and lines starting with '#' are skipped.
/// Throws InvalidArgument on a malformed line.
std::vector<double> read_signal_csv(std::istream& is);
/// Throws IoError when the file cannot be opened.
std::vector<double> read_signal_file(const std::string& path);

}  // namespace wavent
