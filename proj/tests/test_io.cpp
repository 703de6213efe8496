#include <catch_amalgamated.hpp>

#include <sstream>

#include "wavent/catalog.hpp"
#include "wavent/entropy.hpp"
#include "wavent/error.hpp"
#include "wavent/filters.hpp"
#include "wavent/io.hpp"
#include "wavent/transform.hpp"

using namespace wavent;
using nlohmann::json;

TEST_CASE("entropy reports round-trip through JSON") {
  const EntropyReport r = entropy_report(get_wavelet("cdeo", {{"alpha", 0.2}}));
  const EntropyReport back = json::parse(json(r).dump()).get<EntropyReport>();
  CHECK(back == r);
  CHECK(json(r).at("params").at("alpha") == 0.2);
}

TEST_CASE("densities round-trip through JSON") {
  const WaveletSpec w = get_wavelet("haar");
  for (const SampledDensity& d : {time_density(w, default_time_grid(w)),
                                  frequency_density(w, default_frequency_grid(w, {1 << 16, 0.0}))}) {
    const SampledDensity back = json::parse(json(d).dump()).get<SampledDensity>();
    CHECK(back.grid == d.grid);
    CHECK(back.values == d.values);
    CHECK(back.domain == d.domain);
    CHECK(back.layout == d.layout);
    CHECK(back.tail == d.tail);
    CHECK(back.mass == d.mass);
    CHECK(back.tail_mass == d.tail_mass);
  }
}

TEST_CASE("filter banks round-trip through JSON") {
  for (const auto& r : filter_registry()) {
    for (int n = r.min_order; n <= r.max_order; ++n) {
      const FilterBank b = get_filters(r.family, n);
      const json j = json(b);
      CHECK(j.at("family") == std::string(to_string(r.family)));
      CHECK(j.at("N") == n);
      CHECK(json::parse(j.dump()).get<FilterBank>() == b);
    }
  }
}

TEST_CASE("manifest lists wavelets and filter ranges") {
  const json m = catalog_manifest();
  bool has_cdeo = false;
  for (const auto& w : m.at("wavelets")) {
    if (w.at("id") == "cdeo") {
      has_cdeo = true;
      CHECK(w.at("params").at(0).at("name") == "alpha");
    }
  }
  CHECK(has_cdeo);
  bool db_range = false;
  for (const auto& f : m.at("filters")) {
    if (f.at("family") == "db") db_range = f.at("min_N") == 1 && f.at("max_N") == 4;
  }
  CHECK(db_range);
}

TEST_CASE("density CSV") {
  const Grid g = Grid::spanning({0.0, 1.0}, 2);
  const SampledDensity d = make_density(g, {1.0, 1.0}, Domain::time, Layout::cells);
  std::ostringstream os;
  write_density_csv(os, d);
  CHECK(os.str() == "coordinate,density\n0.25,1\n0.75,1\n");
}

TEST_CASE("report rows use six decimals in table order") {
  EntropyReport r;
  r.h_time = 1.0;
  r.h_freq = 3.9856534;
  r.product = 3.9856534;
  r.h_global = 4.9856534;
  const std::string row = format_report_row("Haar", r);
  CHECK(row.find("1.000000") != std::string::npos);
  CHECK(row.find("3.985653") < row.find("4.985653"));
}

TEST_CASE("signal CSV reader") {
  std::istringstream ok("# header\n1.5\n\n-2\n3e-1,\n");
  CHECK(read_signal_csv(ok) == std::vector<double>{1.5, -2.0, 0.3});
  std::istringstream bad("1\nabc\n");
  CHECK_THROWS_AS(read_signal_csv(bad), InvalidArgument);
  CHECK_THROWS_AS(read_signal_file("/nonexistent/signal.csv"), IoError);
}
