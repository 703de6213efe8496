#include "wavent/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wavent/catalog.hpp"
#include "wavent/error.hpp"

namespace wavent {

using nlohmann::json;

void to_json(json& j, const Grid& g) { j = json{{"start", g.start}, {"step", g.step}, {"count", g.count}}; }

void from_json(const json& j, Grid& g) {
  g = Grid(j.at("start").get<double>(), j.at("step").get<double>(), j.at("count").get<std::size_t>());
}

void to_json(json& j, const TailModel& t) { j = json{{"period", t.period}, {"center", t.center}}; }

void from_json(const json& j, TailModel& t) {
  t.period = j.at("period").get<double>();
  t.center = j.at("center").get<double>();
}

void to_json(json& j, const SampledDensity& d) {
  j = json{{"domain", to_string(d.domain)},
           {"layout", to_string(d.layout)},
           {"grid", d.grid},
           {"mass", d.mass},
           {"tail_mass", d.tail_mass},
           {"truncation_error_estimate", d.truncation_error_estimate},
           {"values", d.values}};
  j["tail"] = d.tail ? json(*d.tail) : json(nullptr);
}

void from_json(const json& j, SampledDensity& d) {
  std::optional<TailModel> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) tail = j.at("tail").get<TailModel>();
  d = make_density(j.at("grid").get<Grid>(), j.at("values").get<std::vector<double>>(),
                   domain_from_string(j.at("domain").get<std::string>()),
                   layout_from_string(j.at("layout").get<std::string>()), tail);
}

void to_json(json& j, const ReportErrors& e) {
  j = json{{"h_time", e.h_time},       {"h_freq", e.h_freq}, {"h_global", e.h_global},
           {"product", e.product},     {"temperature", e.temperature}, {"energy", e.energy}};
}

void from_json(const json& j, ReportErrors& e) {
  j.at("h_time").get_to(e.h_time);
  j.at("h_freq").get_to(e.h_freq);
  j.at("h_global").get_to(e.h_global);
  j.at("product").get_to(e.product);
  j.at("temperature").get_to(e.temperature);
  j.at("energy").get_to(e.energy);
}

void to_json(json& j, const EntropyReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j = json{{"wavelet", r.wavelet_id}, {"params", params},       {"log_base", r.log_base},
           {"h_time", r.h_time},      {"h_freq", r.h_freq},     {"h_global", r.h_global},
           {"product", r.product},    {"energy", r.energy},     {"temperature", r.temperature},
           {"errors", r.errors}};
}

void from_json(const json& j, EntropyReport& r) {
  j.at("wavelet").get_to(r.wavelet_id);
  r.params.clear();
  for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<double>();
  j.at("log_base").get_to(r.log_base);
  j.at("h_time").get_to(r.h_time);
  j.at("h_freq").get_to(r.h_freq);
  j.at("h_global").get_to(r.h_global);
  j.at("product").get_to(r.product);
  j.at("energy").get_to(r.energy);
  j.at("temperature").get_to(r.temperature);
  j.at("errors").get_to(r.errors);
}

void to_json(json& j, const FilterBank& b) {
  j = json{{"family", to_string(b.family)}, {"N", b.order}, {"h", b.h}, {"g", b.g}, {"convention", b.convention}};
}

void from_json(const json& j, FilterBank& b) {
  b.family = filter_family_from_string(j.at("family").get<std::string>());
  j.at("N").get_to(b.order);
  j.at("h").get_to(b.h);
  j.at("g").get_to(b.g);
  b.convention = j.value("convention", std::string{});
}

json catalog_manifest() {
  json wavelets = json::array();
  for (const auto& e : catalog()) {
    json params = json::array();
    for (const auto& p : e.params) {
      params.push_back({{"name", p.name},
                        {"min", p.lo},
                        {"max", p.hi},
                        {"min_exclusive", p.lo_open},
                        {"default", p.default_value}});
    }
    wavelets.push_back({{"id", e.id}, {"description", e.description}, {"params", params}});
  }
  json filters = json::array();
  for (const auto& r : filter_registry()) {
    filters.push_back({{"family", to_string(r.family)}, {"min_N", r.min_order}, {"max_N", r.max_order}});
  }
  return json{{"wavelets", wavelets}, {"filters", filters}};
}

void write_density_csv(std::ostream& os, const SampledDensity& d) {
  os << "coordinate,density\n";
  char buf[64];
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const int n = std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", d.coordinate(i), d.values[i]);
    os.write(buf, n);
  }
}

std::string format_report_row(const std::string& label, const EntropyReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(12) << label << std::right << std::fixed << std::setprecision(6);
  for (double v : {r.h_time, r.h_freq, r.product, r.h_global}) os << std::setw(12) << v;
  return os.str();
}

std::vector<double> read_signal_csv(std::istream& is) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string_view field(line.data() + first, last - first + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw InvalidArgument("signal line " + std::to_string(lineno) + " is not a real number: '" +
                            std::string(field) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open signal file '" + path + "'");
  return read_signal_csv(in);
}

}  // namespace wavent
