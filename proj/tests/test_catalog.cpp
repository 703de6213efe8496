#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "wavent/catalog.hpp"
#include "wavent/error.hpp"
#include "wavent/transform.hpp"

using namespace wavent;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

namespace {

const char* const kIds[] = {"cmor", "mor", "mexh", "gauss1", "csha", "sha", "haar", "cdeo"};

bool near_band_edge(const SupportInfo& s, double w, double margin) {
  if (s.decay != Decay::compact) return false;
  for (const auto& b : s.bands) {
    if (std::abs(w - b.lo) < margin || std::abs(w - b.hi) < margin) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("catalog lists every wavelet family") {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  for (const char* id : kIds) CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}

TEST_CASE("invalid requests are rejected") {
  CHECK_THROWS_AS(get_wavelet("nosuch"), InvalidArgument);
  CHECK_THROWS_AS(get_wavelet("cdeo", {{"alpha", 0.5}}), InvalidArgument);
  CHECK_THROWS_AS(get_wavelet("cdeo", {{"alpha", 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(get_wavelet("cmor", {{"alpha", 0.1}}), InvalidArgument);
  CHECK_THROWS_AS(get_wavelet("haar", {{"scale", 0.0}}), InvalidArgument);
  CHECK_NOTHROW(get_wavelet("cdeo", {{"alpha", 1.0 / 3.0}}));
}

TEST_CASE("haar time function and spectrum") {
  const WaveletSpec h = get_wavelet("haar");
  CHECK_THAT(std::abs(h.time(-0.5)), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(std::abs(h.time(0.5)), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  CHECK(h.time(-0.5).real() == -h.time(0.5).real());
  CHECK(std::abs(h.time(1.5)) == 0.0);
  CHECK(std::abs(h.spectrum(0.0)) == 0.0);
  // |Psi(w)|^2 = 8 sin^4(w/2) / w^2 for the unit-energy pair of unit boxes.
  for (double w : {0.3, 1.0, 2.5, 7.0, 40.0}) {
    const double expected = 8.0 * std::pow(std::sin(w / 2.0), 4) / (w * w);
    CHECK_THAT(std::norm(h.spectrum(w)), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("unit energy and admissibility for every wavelet") {
  for (const char* id : kIds) {
    INFO(id);
    const WaveletSpec w = get_wavelet(id);
    CHECK_THAT(energy(w), WithinAbs(1.0, 1e-6));
    CHECK(std::norm(w.spectrum(0.0)) / (2.0 * pi) <= 1e-6);
  }
  CHECK_THAT(energy(get_wavelet("cmor")), WithinAbs(1.0, 1e-8));
  CHECK_THAT(energy(get_wavelet("haar")), WithinAbs(1.0, 1e-15));
}

TEST_CASE("gauss1 is a Fourier eigenfunction up to sqrt(2 pi)") {
  const WaveletSpec g = get_wavelet("gauss1");
  for (double w = -8.0; w <= 8.0; w += 1.0 / 64.0) {
    CHECK_THAT(std::abs(g.spectrum(w)), WithinAbs(std::sqrt(2.0 * pi) * std::abs(g.time(w)), 1e-5));
  }
}

TEST_CASE("cmor spectrum is a Gaussian centred at the modulation frequency") {
  const WaveletSpec c = get_wavelet("cmor");
  const double peak = std::abs(c.spectrum(5.0));
  CHECK(std::abs(c.spectrum(4.9)) < peak);
  CHECK(std::abs(c.spectrum(5.1)) < peak);
  CHECK_THAT(std::abs(c.spectrum(4.0)), WithinAbs(std::abs(c.spectrum(6.0)), 1e-14));
}

TEST_CASE("daughter densities are dilated, shifted copies") {
  for (const char* id : {"mexh", "cmor", "haar", "csha"}) {
    const WaveletSpec m = get_wavelet(id);
    for (double a : {0.5, 2.0, -3.0}) {
      for (double b : {0.0, 1.0, -5.0}) {
        INFO(id << " a=" << a << " b=" << b);
        const WaveletSpec d = daughter(m, a, b);
        for (double t : {-2.3, -0.7, 0.1, 0.45, 1.9}) {
          const double pd = std::norm(d.time(b + a * t));
          const double pm = std::norm(m.time(t)) / std::abs(a);
          CHECK_THAT(pd, WithinAbs(pm, 1e-10));
        }
        for (double w : {-4.0, -1.0, 0.7, 3.3, 6.0}) {
          CHECK_THAT(std::abs(d.spectrum(w)), WithinAbs(std::sqrt(std::abs(a)) * std::abs(m.spectrum(a * w)), 1e-10));
        }
      }
    }
  }
}

TEST_CASE("daughters compose") {
  const WaveletSpec d = daughter(daughter(get_wavelet("mexh"), 2.0, 1.0), 3.0, -1.0);
  CHECK(d.params.at("scale") == 6.0);
  CHECK(d.params.at("shift") == 2.0);
  const WaveletSpec direct = get_wavelet("mexh", {{"scale", 6.0}, {"shift", 2.0}});
  for (double t : {-3.0, 0.0, 2.0, 7.5}) CHECK_THAT(std::abs(d.time(t) - direct.time(t)), WithinAbs(0.0, 1e-14));
}

TEST_CASE("closed-form spectra agree with the transform fallback") {
  for (const char* id : kIds) {
    INFO(id);
    const WaveletSpec w = get_wavelet(id);
    GridOptions opt;
    if (w.time_support.decay == Decay::inverse_square) opt.intervals = std::size_t{1} << 15;
    if (w.freq_support.decay == Decay::inverse_square) opt.intervals = std::size_t{1} << 20;
    const Grid g = default_frequency_grid(w, opt);
    const SampledDensity closed = frequency_density(w, g);
    const SampledDensity numeric = frequency_density_by_transform(w, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < closed.values.size(); ++i) {
      if (near_band_edge(w.freq_support, closed.coordinate(i), 1.0)) continue;
      worst = std::max(worst, std::abs(closed.values[i] - numeric.values[i]));
    }
    CHECK(worst <= 1e-4);
  }
}

TEST_CASE("fallback refuses a frequency step too coarse for the time support") {
  const WaveletSpec w = without_spectrum(get_wavelet("csha"));
  CHECK_FALSE(w.has_spectrum());
  const Grid g = default_frequency_grid(w, {std::size_t{1} << 10, 0.0});
  CHECK_THROWS_AS(frequency_density(w, g), CoverageError);
}

TEST_CASE("cdeo spectrum is one-sided with a flat pass band") {
  const double alpha = 0.2;
  const WaveletSpec c = get_wavelet("cdeo", {{"alpha", alpha}});
  CHECK(std::abs(c.spectrum(-2.0)) == 0.0);
  CHECK(std::abs(c.spectrum(pi * (1 - alpha) - 1e-9)) == 0.0);
  CHECK(std::abs(c.spectrum(2 * pi * (1 + alpha) + 1e-9)) == 0.0);
  const double flat = std::abs(c.spectrum(1.5 * pi));
  CHECK_THAT(std::abs(c.spectrum(pi * (1 + alpha) + 0.05)), WithinAbs(flat, 1e-14));
  // Raised-cosine roll-offs carry half their width, so the band has unit
  // energy with |Psi|^2 = 2 on the flat part.
  CHECK_THAT(flat, WithinAbs(std::sqrt(2.0), 1e-14));
}
