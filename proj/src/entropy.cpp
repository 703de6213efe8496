#include "wavent/entropy.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "wavent/error.hpp"
#include "wavent/kernels.hpp"

namespace wavent {
namespace {

constexpr double kMassTolerance = 1e-6;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double log_factor(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw InvalidArgument("logarithm base must be a finite number > 1");
  }
  return std::log(base);
}

void require_unit_mass(const SampledDensity& d) {
  const double total = d.total_mass();
  const double tol = std::max(kMassTolerance, d.truncation_error_estimate);
  if (!(std::abs(total - 1.0) <= tol)) {
    std::ostringstream msg;
    msg << "density mass " << total << " differs from 1 by more than " << tol;
    throw NormalizationError(msg.str());
  }
}

double endpoint_weight(const SampledDensity& d) { return d.layout == Layout::nodes ? 0.5 : 0.0; }

double neg_plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

// Grid part of -integral p ln p, plus a bound on its accumulated roundoff.
std::pair<double, double> grid_entropy_nats(const SampledDensity& d) {
  const kernels::EntropySums s = kernels::entropy_sums(d.values);
  const double w = endpoint_weight(d);
  const double ends = w * (neg_plogp(d.values.front()) + neg_plogp(d.values.back()));
  const double value = d.grid.step * (s.neg_plogp - ends);
  const double n = static_cast<double>(d.values.size());
  const double roundoff = 4.0 * n * kEps * (std::abs(value) + d.grid.step * s.mass);
  return {value, roundoff};
}

double entropy_nats(const SampledDensity& d, double& tail_error, double& roundoff) {
  auto [grid_part, r] = grid_entropy_nats(d);
  roundoff = r;
  const TailEstimate t = estimate_tail(d);
  tail_error = t.error;
  return grid_part + t.neg_plogp;
}

double power_integral(const SampledDensity& d, double s) {
  const double w = endpoint_weight(d);
  auto pw = [s](double p) { return p > 0.0 ? std::pow(p, s) : 0.0; };
  const double ends = w * (pw(d.values.front()) + pw(d.values.back()));
  return d.grid.step * (kernels::power_sum(d.values, s) - ends) + estimate_tail_power(d, s);
}

double renyi_nats(const SampledDensity& d, double s) {
  const double integral = power_integral(d, s);
  if (std::isinf(integral)) return std::numeric_limits<double>::infinity();
  if (!(integral > 0.0)) throw NormalizationError("Renyi integral vanished");
  return std::log(integral) / (1.0 - s);
}

bool can_coarsen(const SampledDensity& d) {
  const std::size_t n = d.grid.intervals();
  if (n < 4 || n % 2 != 0) return false;
  if (d.tail && 2.0 * d.grid.step * 16.0 > d.tail->period) return false;
  return true;
}

// max(|F(N) - F(N/2)|, |F(N/2) - F(N/4)| / 8). The second level bounds the
// error when zeros of the density make a single difference cancel.
template <class F>
double richardson(const SampledDensity& d, double fine, F&& value_of) {
  if (!can_coarsen(d)) return 0.0;
  const SampledDensity half = coarsen(d);
  const double mid = value_of(half);
  double err = std::abs(fine - mid);
  if (can_coarsen(half)) err = std::max(err, std::abs(mid - value_of(coarsen(half))) / 8.0);
  return err;
}

}  // namespace

RenyiOrder::RenyiOrder(double s, double log_base) : s_(s), base_(log_base) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("Renyi order must be positive");
  if (s == 1.0) throw InvalidArgument("Renyi order 1 is the Shannon entropy; use shannon_entropy");
  log_factor(log_base);
}

Estimate shannon_entropy(const SampledDensity& density, double log_base) {
  const double ln_base = log_factor(log_base);
  require_unit_mass(density);
  double tail_error = 0.0;
  double roundoff = 0.0;
  const double fine = entropy_nats(density, tail_error, roundoff);
  const double diff = richardson(density, fine, [](const SampledDensity& c) {
    double te = 0.0;
    double rc = 0.0;
    return entropy_nats(c, te, rc);
  });
  return {fine / ln_base, (diff + tail_error + roundoff) / ln_base};
}

Estimate renyi_entropy(const SampledDensity& density, const RenyiOrder& order) {
  const double ln_base = std::log(order.log_base());
  require_unit_mass(density);
  const double s = order.s();
  const double fine = renyi_nats(density, s);
  if (std::isinf(fine)) {
    return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
  double error = 8.0 * static_cast<double>(density.values.size()) * kEps * std::abs(fine);
  error += richardson(density, fine, [s](const SampledDensity& c) { return renyi_nats(c, s); });
  if (density.tail) {
    // Period-mean replacement in the tail integral, relative O(period / W).
    const double tail = estimate_tail_power(density, s);
    const double w = std::min(std::abs(density.grid.start - density.tail->center),
                              std::abs(density.grid.end() - density.tail->center));
    error += tail * (density.tail->period / w) / (power_integral(density, s) * std::abs(1.0 - s));
  }
  return {fine / ln_base, error / ln_base};
}

double jumarie_entropy(std::span<const double> f, const Grid& grid, double log_base) {
  const double ln_base = log_factor(log_base);
  if (f.size() != grid.count) throw InvalidArgument("function samples must match the grid nodes");
  std::vector<double> slope(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) slope[i] = std::abs(f[i + 1] - f[i]) / grid.step;
  const kernels::EntropySums s = kernels::entropy_sums(slope);
  if (!(s.mass > 0.0)) throw InvalidArgument("function has zero total variation");
  return s.neg_plogp / s.mass / ln_base;
}

double global_entropy(double h_time, double h_freq) { return h_time + h_freq; }

double temperature(double energy, double h_global) {
  if (!(h_global > 0.0)) throw InvalidArgument("temperature needs a positive global entropy");
  return energy / h_global;
}

std::pair<double, double> predict_daughter_entropy(double h_time, double h_freq, double a,
                                                   double log_base) {
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("scale must be finite and nonzero");
  const double shift = std::log(std::abs(a)) / log_factor(log_base);
  return {h_time + shift, h_freq - shift};
}

double coefficient_entropy(std::span<const double> coeffs, double log_base) {
  const double ln_base = log_factor(log_base);
  if (coeffs.empty()) throw InvalidArgument("empty coefficient list");
  std::vector<double> sq(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) sq[i] = coeffs[i] * coeffs[i];
  const double total = std::accumulate(sq.begin(), sq.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "sum of squared coefficients is " << total << ", expected 1";
    throw NormalizationError(msg.str());
  }
  double h = 0.0;
  for (double p : sq) h += neg_plogp(p);
  return h / ln_base;
}

double mra_entropy(const FilterBank& bank, double log_base) { return coefficient_entropy(bank.g, log_base); }

double swt_entropy(std::span<const double> level_energies, double log_base) {
  const double ln_base = log_factor(log_base);
  double total = 0.0;
  for (double e : level_energies) {
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidArgument("level energies must be finite and nonnegative");
    total += e;
  }
  if (!(total > 0.0)) throw InvalidArgument("all level energies are zero");
  double h = 0.0;
  for (double e : level_energies) h += neg_plogp(e / total);
  return h / ln_base;
}

EntropyReport assemble_report(std::string id, ParamMap params, double log_base, Estimate h_time,
                              Estimate h_freq, Estimate energy) {
  EntropyReport r;
  r.wavelet_id = std::move(id);
  r.params = std::move(params);
  r.log_base = log_base;
  r.h_time = h_time.value;
  r.h_freq = h_freq.value;
  r.h_global = global_entropy(h_time.value, h_freq.value);
  r.product = h_time.value * h_freq.value;
  r.energy = energy.value;
  r.temperature = temperature(energy.value, r.h_global);
  r.errors.h_time = h_time.error;
  r.errors.h_freq = h_freq.error;
  r.errors.h_global = h_time.error + h_freq.error;
  r.errors.product = std::abs(h_freq.value) * h_time.error + std::abs(h_time.value) * h_freq.error;
  r.errors.energy = energy.error;
  r.errors.temperature =
      energy.error / r.h_global + std::abs(energy.value) * r.errors.h_global / (r.h_global * r.h_global);
  return r;
}

EntropyReport entropy_report(const WaveletSpec& spec, const ReportOptions& opt) {
  const SampledDensity pt = time_density(spec, default_time_grid(spec, opt.time_grid));
  const SampledDensity pf = frequency_density(spec, default_frequency_grid(spec, opt.freq_grid));
  const Estimate ht = shannon_entropy(pt, opt.log_base);
  const Estimate hf = shannon_entropy(pf, opt.log_base);
  double energy_error = pt.truncation_error_estimate;
  if (can_coarsen(pt)) energy_error += std::abs(pt.total_mass() - coarsen(pt).total_mass());
  return assemble_report(spec.id, spec.params, opt.log_base, ht, hf, {pt.total_mass(), energy_error});
}

}  // namespace wavent
