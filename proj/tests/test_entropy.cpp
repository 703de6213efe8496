#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "wavent/catalog.hpp"
#include "wavent/entropy.hpp"
#include "wavent/error.hpp"
#include "wavent/transform.hpp"

using namespace wavent;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

namespace {

SampledDensity gaussian(double sigma) {
  const Grid g = Grid::spanning({-20.0 * sigma, 20.0 * sigma}, 1 << 14);
  std::vector<double> v(g.count);
  for (std::size_t i = 0; i < g.count; ++i) {
    const double x = g.at(i) / sigma;
    v[i] = std::exp(-0.5 * x * x) / (sigma * std::sqrt(2.0 * pi));
  }
  return make_density(g, std::move(v), Domain::time, Layout::nodes);
}

SampledDensity uniform(double width) {
  const Grid g = Grid::spanning({0.0, width}, 64);
  return make_density(g, std::vector<double>(64, 1.0 / width), Domain::time, Layout::cells);
}

SampledDensity time_of(const char* id) {
  const WaveletSpec w = get_wavelet(id);
  return time_density(w, default_time_grid(w));
}

}  // namespace

TEST_CASE("Shannon entropy of analytic densities") {
  for (double sigma : {0.25, 1.0, 3.0}) {
    const double expected = 0.5 * std::log2(2.0 * pi * std::numbers::e * sigma * sigma);
    CHECK_THAT(shannon_entropy(gaussian(sigma)).value, WithinAbs(expected, 1e-10));
  }
  CHECK_THAT(shannon_entropy(uniform(8.0)).value, WithinAbs(3.0, 1e-14));
  CHECK_THAT(shannon_entropy(uniform(8.0), kNaturalBase).value, WithinAbs(std::log(8.0), 1e-14));
}

TEST_CASE("Shannon entropy of catalog time densities") {
  CHECK_THAT(shannon_entropy(time_of("haar")).value, WithinAbs(1.0, 1e-12));
  CHECK_THAT(shannon_entropy(time_of("cmor")).value, WithinAbs(std::log2(std::sqrt(pi * std::numbers::e)), 1e-6));
  CHECK_THAT(shannon_entropy(time_of("mexh")).value, WithinAbs(1.715098, 1e-3));
}

TEST_CASE("unnormalized densities are rejected") {
  const Grid g = Grid::spanning({0.0, 1.0}, 8);
  const SampledDensity d = make_density(g, std::vector<double>(8, 2.0), Domain::time, Layout::cells);
  CHECK_THROWS_AS(shannon_entropy(d), NormalizationError);
  CHECK_THROWS_AS(renyi_entropy(d, RenyiOrder(2.0)), NormalizationError);
}

TEST_CASE("Renyi order validation") {
  CHECK_THROWS_AS(RenyiOrder(0.0), InvalidArgument);
  CHECK_THROWS_AS(RenyiOrder(-1.0), InvalidArgument);
  CHECK_THROWS_AS(RenyiOrder(1.0), InvalidArgument);
  CHECK_THROWS_AS(RenyiOrder(2.0, 1.0), InvalidArgument);
  CHECK_NOTHROW(RenyiOrder(2.0, kNaturalBase));
}

TEST_CASE("Renyi entropy") {
  const SampledDensity haar = time_of("haar");
  // Near s = 1 the 1/(1-s) factor amplifies roundoff.
  for (double s : {0.3, 0.999, 2.0, 5.0}) CHECK_THAT(renyi_entropy(haar, RenyiOrder(s)).value, WithinAbs(1.0, 1e-9));
  const SampledDensity cmor = time_of("cmor");
  CHECK_THAT(renyi_entropy(cmor, RenyiOrder(1.001)).value, WithinAbs(1.547096, 1e-3));
  // p = exp(-t^2)/sqrt(pi): integral p^2 = 1/sqrt(2 pi).
  CHECK_THAT(renyi_entropy(cmor, RenyiOrder(2.0)).value, WithinAbs(0.5 * std::log2(2.0 * pi), 1e-9));
  // Order 2 of a Gaussian: log(2 sigma sqrt(pi)).
  CHECK_THAT(renyi_entropy(gaussian(2.0), RenyiOrder(2.0, kNaturalBase)).value,
             WithinAbs(std::log(4.0 * std::sqrt(pi)), 1e-10));
}

TEST_CASE("Renyi diverges below order one half for inverse-square tails") {
  const SampledDensity d = time_of("sha");
  CHECK(std::isinf(renyi_entropy(d, RenyiOrder(0.4)).value));
  CHECK(std::isfinite(renyi_entropy(d, RenyiOrder(0.6)).value));
}

TEST_CASE("Jumarie entropy") {
  const Grid g = Grid::spanning({0.0, 4.0}, 256);
  std::vector<double> ramp(g.count);
  for (std::size_t i = 0; i < g.count; ++i) ramp[i] = g.at(i);
  CHECK_THAT(jumarie_entropy(ramp, g), WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(jumarie_entropy(std::vector<double>(g.count, 1.0), g), InvalidArgument);
  CHECK_THROWS_AS(jumarie_entropy(std::vector<double>(3, 1.0), g), InvalidArgument);

  const SampledDensity haar = time_of("haar");
  CHECK_THAT(jumarie_entropy(cdf(haar), haar.grid), WithinAbs(1.0, 1e-12));
  const SampledDensity cmor = time_of("cmor");
  CHECK_THAT(jumarie_entropy(cdf(cmor), cmor.grid), WithinAbs(1.547096, 1e-3));
}

TEST_CASE("global entropy and temperature") {
  CHECK(global_entropy(0.0, 2.5) == 2.5);
  CHECK_THAT(global_entropy(1.0, 3.985653), WithinAbs(4.985653, 1e-15));
  CHECK_THAT(temperature(1.0, 4.0), WithinAbs(0.25, 1e-15));
  CHECK_THROWS_AS(temperature(1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(temperature(1.0, -1.0), InvalidArgument);
}

TEST_CASE("daughter entropy prediction") {
  const auto [t, f] = predict_daughter_entropy(1.0, 3.0, 2.0);
  CHECK(t == 2.0);
  CHECK(f == 2.0);
  const auto [t1, f1] = predict_daughter_entropy(0.7, 1.3, -1.0);
  CHECK(t1 == 0.7);
  CHECK(f1 == 1.3);
  CHECK_THROWS_AS(predict_daughter_entropy(1.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("coefficient and level-energy entropies") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THAT(coefficient_entropy(std::vector<double>{r, -r}), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(coefficient_entropy(std::vector<double>{0.5, 0.5}), NormalizationError);
  CHECK(swt_entropy(std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
  CHECK_THAT(swt_entropy(std::vector<double>{1.0, 1.0, 1.0, 1.0}), WithinAbs(std::log(4.0), 1e-15));
  CHECK_THAT(swt_entropy(std::vector<double>{0.5, 0.25, 0.25}),
             WithinAbs(-(0.5 * std::log(0.5) + 0.5 * std::log(0.25)), 1e-15));
  CHECK_THAT(swt_entropy(std::vector<double>{2.0, 2.0}, 2.0), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(swt_entropy(std::vector<double>{0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(swt_entropy(std::vector<double>{1.0, -0.5}), InvalidArgument);
}

TEST_CASE("report fields are derived exactly") {
  const EntropyReport r = entropy_report(get_wavelet("mexh"));
  CHECK(r.h_global == r.h_time + r.h_freq);
  CHECK(r.product == r.h_time * r.h_freq);
  CHECK(r.temperature == r.energy / r.h_global);
  CHECK(r.errors.h_time > 0.0);
  CHECK(r.errors.h_time < 1e-6);
  CHECK(r.errors.h_freq < 1e-6);
  const EntropyReport nats = entropy_report(get_wavelet("mexh"), {{}, {}, kNaturalBase});
  CHECK_THAT(nats.h_time, WithinAbs(r.h_time * std::log(2.0), 1e-12));
}

TEST_CASE("daughter report follows the scaling law") {
  const WaveletSpec m = get_wavelet("gauss1");
  const EntropyReport base = entropy_report(m);
  const EntropyReport d = entropy_report(daughter(m, 4.0, -2.0));
  CHECK_THAT(d.h_time - base.h_time, WithinAbs(2.0, 1e-6));
  CHECK_THAT(d.h_freq - base.h_freq, WithinAbs(-2.0, 1e-6));
}
