#include "wavent/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "wavent/error.hpp"
#include "wavent/kernels.hpp"

namespace wavent {
namespace {

using std::numbers::pi;

constexpr std::size_t kGaussianIntervals = std::size_t{1} << 16;
constexpr std::size_t kSincIntervals = std::size_t{1} << 22;
constexpr std::size_t kQuarticIntervals = std::size_t{1} << 16;
constexpr std::size_t kPiecewiseIntervals = std::size_t{1} << 12;
constexpr std::size_t kSmoothCompactIntervals = std::size_t{1} << 16;
constexpr std::size_t kMaxTransformPoints = std::size_t{1} << 24;
constexpr std::size_t kMinSamplesPerPeriod = 16;
constexpr std::size_t kChunk = 4096;

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(fftw_alloc_complex(n)) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

struct FftwPlan {
  FftwPlan(std::size_t n, fftw_complex* buf) {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  ~FftwPlan() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
  fftw_plan plan;
};

bool is_power_of_two(std::size_t n) { return n >= 2 && std::has_single_bit(n); }

std::size_t default_intervals(const SupportInfo& s) {
  switch (s.decay) {
    case Decay::compact: return s.piecewise_constant ? kPiecewiseIntervals : kSmoothCompactIntervals;
    case Decay::gaussian: return kGaussianIntervals;
    case Decay::inverse_square: return kSincIntervals;
    case Decay::inverse_quartic: return kQuarticIntervals;
  }
  return kGaussianIntervals;
}

Grid default_grid(const SupportInfo& s, const GridOptions& opt) {
  const Interval hull = s.hull();
  const double default_half = s.decay == Decay::compact ? hull.length() : 0.5 * hull.length();
  const double half = opt.half_width > 0.0 ? opt.half_width : default_half;
  std::size_t intervals = default_intervals(s);
  if (opt.intervals != 0) {
    if (!is_power_of_two(opt.intervals)) {
      throw InvalidArgument("sample count must be a power of two >= 2, got " +
                            std::to_string(opt.intervals));
    }
    intervals = opt.intervals;
  }
  const double c = hull.mid();
  return Grid::spanning({c - half, c + half}, intervals);
}

void require_coverage(const Grid& grid, const SupportInfo& support, std::string_view what) {
  const Interval hull = support.hull();
  if (!grid.covers(hull)) {
    std::ostringstream msg;
    msg << what << " grid [" << grid.start << ", " << grid.end() << "] does not cover the effective support ["
        << hull.lo << ", " << hull.hi << "]";
    throw CoverageError(msg.str());
  }
}

// Sampling positions for a layout: nodes or cell midpoints.
std::size_t sample_count(const Grid& g, Layout layout) {
  return layout == Layout::cells ? g.count - 1 : g.count;
}

double sample_position(const Grid& g, Layout layout, std::size_t i) {
  return layout == Layout::cells ? g.at(i) + 0.5 * g.step : g.at(i);
}

template <class Fn>
std::vector<double> sample_squared(const Grid& grid, Layout layout, double scale, Fn&& fn) {
  const std::size_t n = sample_count(grid, layout);
  std::vector<double> out(n);
  std::vector<Complex> buf(std::min(n, kChunk));
  for (std::size_t base = 0; base < n; base += kChunk) {
    const std::size_t len = std::min(kChunk, n - base);
    for (std::size_t i = 0; i < len; ++i) buf[i] = fn(sample_position(grid, layout, base + i));
    kernels::squared_modulus({buf.data(), len}, {out.data() + base, len}, scale);
  }
  return out;
}

std::optional<TailModel> tail_of(const SupportInfo& s) {
  if (s.decay != Decay::inverse_square) return std::nullopt;
  return TailModel{s.tail_period, s.center};
}

Layout layout_of(const SupportInfo& s) { return s.piecewise_constant ? Layout::cells : Layout::nodes; }

// Integrals of A(x) = (x-c)^2 p(x) and of A ln A, and of A^s, over exactly one
// period ending at the grid end (right) or starting at the grid start (left).
struct PeriodMeans {
  double a = 0.0;
  double a_log_a = 0.0;
  double a_pow = 0.0;
  double distance = 0.0;  // |grid end - centre|
};

PeriodMeans period_means(const SampledDensity& d, bool right, double s) {
  const Grid& g = d.grid;
  const double period = d.tail->period;
  const double c = d.tail->center;
  const std::size_t n = d.values.size();
  const double steps = period / g.step;
  if (steps < static_cast<double>(kMinSamplesPerPeriod) || steps + 2.0 > static_cast<double>(n)) {
    throw CoverageError("grid too coarse or too short for the algebraic tail model");
  }

  auto coord = [&](double idx) {
    return d.layout == Layout::cells ? g.start + (idx + 0.5) * g.step : g.start + idx * g.step;
  };
  auto amp = [&](std::size_t i) {
    const double x = coord(static_cast<double>(i)) - c;
    return x * x * d.values[i];
  };
  auto accumulate = [&](double a, double w, PeriodMeans& m) {
    m.a += w * a;
    if (a > 0.0) m.a_log_a += w * a * std::log(a);
    if (s > 0.0 && a > 0.0) m.a_pow += w * std::pow(a, s);
  };

  PeriodMeans m;
  // Walk from the outer end inwards over `steps` intervals, interpolating the
  // partial interval at the inner boundary.
  const std::size_t whole = static_cast<std::size_t>(std::floor(steps));
  const double frac = steps - static_cast<double>(whole);
  auto index = [&](std::size_t k) { return right ? n - 1 - k : k; };
  for (std::size_t k = 0; k < whole; ++k) {
    accumulate(amp(index(k)), 0.5 * g.step, m);
    accumulate(amp(index(k + 1)), 0.5 * g.step, m);
  }
  if (frac > 0.0) {
    const double a0 = amp(index(whole));
    const double a1 = amp(index(whole + 1));
    const double mid = a0 + frac * (a1 - a0);
    accumulate(a0, 0.5 * frac * g.step, m);
    accumulate(mid, 0.5 * frac * g.step, m);
  }
  m.a /= period;
  m.a_log_a /= period;
  m.a_pow /= period;
  const double edge = right ? coord(static_cast<double>(n - 1)) : coord(0.0);
  m.distance = std::abs(edge - c);
  return m;
}

}  // namespace

Grid::Grid(double start_, double step_, std::size_t count_) : start(start_), step(step_), count(count_) {
  if (count < 2) throw InvalidArgument("grid needs at least 2 nodes");
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start)) {
    throw InvalidArgument("grid step must be positive and finite");
  }
}

Grid Grid::spanning(Interval span, std::size_t intervals) {
  if (intervals < 1 || !(span.hi > span.lo)) throw InvalidArgument("empty grid span");
  return Grid(span.lo, span.length() / static_cast<double>(intervals), intervals + 1);
}

bool Grid::covers(Interval support) const {
  const double slack = 1e-9 * std::max({1.0, std::abs(support.lo), std::abs(support.hi)});
  return start <= support.lo + slack && end() >= support.hi - slack;
}

std::string_view to_string(Domain d) { return d == Domain::time ? "time" : "frequency"; }

Domain domain_from_string(std::string_view s) {
  if (s == "time") return Domain::time;
  if (s == "frequency" || s == "freq") return Domain::frequency;
  throw InvalidArgument("unknown domain '" + std::string(s) + "'");
}

std::string_view to_string(Layout l) { return l == Layout::nodes ? "nodes" : "cells"; }

Layout layout_from_string(std::string_view s) {
  if (s == "nodes") return Layout::nodes;
  if (s == "cells") return Layout::cells;
  throw InvalidArgument("unknown layout '" + std::string(s) + "'");
}

double SampledDensity::coordinate(std::size_t i) const { return sample_position(grid, layout, i); }

bool SampledDensity::normalized(double tolerance) const {
  return std::abs(total_mass() - 1.0) <= tolerance &&
         std::abs(mass - 1.0) <= std::max(tolerance, truncation_error_estimate);
}

double integrate(const SampledDensity& like, std::span<const double> f) {
  const double s = kernels::sum(f);
  if (like.layout == Layout::cells) return like.grid.step * s;
  return like.grid.step * (s - 0.5 * (f.front() + f.back()));
}

SampledDensity make_density(Grid grid, std::vector<double> values, Domain domain, Layout layout,
                            std::optional<TailModel> tail) {
  if (values.size() != sample_count(grid, layout)) {
    throw InvalidArgument("density has " + std::to_string(values.size()) + " values, layout needs " +
                          std::to_string(sample_count(grid, layout)));
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("density values must be finite and nonnegative");
  }
  SampledDensity d;
  d.grid = grid;
  d.values = std::move(values);
  d.domain = domain;
  d.layout = layout;
  d.tail = tail;
  d.mass = integrate(d, d.values);
  if (d.tail) {
    const TailEstimate t = estimate_tail(d);
    d.tail_mass = t.mass;
    d.truncation_error_estimate = t.mass + t.error;
  }
  return d;
}

TailEstimate estimate_tail(const SampledDensity& d) {
  TailEstimate out;
  if (!d.tail) return out;
  for (bool right : {false, true}) {
    const PeriodMeans m = period_means(d, right, 0.0);
    const double w = m.distance;
    const double mass = m.a / w;
    const double nats = m.a * 2.0 * (std::log(w) + 1.0) / w - m.a_log_a / w;
    out.mass += mass;
    out.neg_plogp += nats;
    // Replacing A by its period mean leaves an O(period / W) relative error.
    const double rel = d.tail->period / w;
    out.error += rel * (std::abs(nats) + mass);
  }
  return out;
}

double estimate_tail_power(const SampledDensity& d, double s) {
  if (!d.tail) return 0.0;
  if (s <= 0.5) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (bool right : {false, true}) {
    const PeriodMeans m = period_means(d, right, s);
    total += m.a_pow * std::pow(m.distance, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
  }
  return total;
}

SampledDensity coarsen(const SampledDensity& d) {
  const std::size_t intervals = d.grid.intervals();
  if (intervals < 4 || intervals % 2 != 0) throw InvalidArgument("cannot halve a grid with an odd interval count");
  Grid g(d.grid.start, 2.0 * d.grid.step, intervals / 2 + 1);
  std::vector<double> v;
  if (d.layout == Layout::nodes) {
    v.resize(g.count);
    for (std::size_t i = 0; i < g.count; ++i) v[i] = d.values[2 * i];
  } else {
    v.resize(g.count - 1);
    for (std::size_t i = 0; i + 1 < g.count; ++i) v[i] = 0.5 * (d.values[2 * i] + d.values[2 * i + 1]);
  }
  return make_density(g, std::move(v), d.domain, d.layout, d.tail);
}

Grid default_time_grid(const WaveletSpec& spec, const GridOptions& opt) {
  return default_grid(spec.time_support, opt);
}

Grid default_frequency_grid(const WaveletSpec& spec, const GridOptions& opt) {
  return default_grid(spec.freq_support, opt);
}

SampledDensity time_density(const WaveletSpec& spec, const Grid& grid) {
  require_coverage(grid, spec.time_support, "time");
  const Layout layout = layout_of(spec.time_support);
  auto values = sample_squared(grid, layout, 1.0, [&](double t) { return spec.time_fn(t); });
  return make_density(grid, std::move(values), Domain::time, layout, tail_of(spec.time_support));
}

SampledDensity frequency_density(const WaveletSpec& spec, const Grid& grid) {
  if (!spec.spectrum_fn) return frequency_density_by_transform(spec, grid);
  require_coverage(grid, spec.freq_support, "frequency");
  const Layout layout = layout_of(spec.freq_support);
  const auto& fn = *spec.spectrum_fn;
  auto values = sample_squared(grid, layout, 1.0 / (2.0 * pi), [&](double w) { return fn(w); });
  return make_density(grid, std::move(values), Domain::frequency, layout, tail_of(spec.freq_support));
}

std::vector<Complex> sampled_spectrum(const WaveletSpec& spec, double t0, double dt, std::size_t n,
                                      double w0) {
  if (!is_power_of_two(n)) throw InvalidArgument("transform length must be a power of two");
  FftwBuffer buf(n);
  FftwPlan plan(n, buf.data);
  for (std::size_t m = 0; m < n; ++m) {
    const double t = t0 + dt * static_cast<double>(m);
    const Complex y = spec.time_fn(t) * std::polar(1.0, -w0 * dt * static_cast<double>(m));
    buf.data[m][0] = y.real();
    buf.data[m][1] = y.imag();
  }
  fftw_execute(plan.plan);
  const double dw = 2.0 * pi / (static_cast<double>(n) * dt);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = w0 + dw * static_cast<double>(k);
    out[k] = dt * std::polar(1.0, -w * t0) * Complex{buf.data[k][0], buf.data[k][1]};
  }
  return out;
}

SampledDensity frequency_density_by_transform(const WaveletSpec& spec, const Grid& grid) {
  require_coverage(grid, spec.freq_support, "frequency");
  const Layout layout = layout_of(spec.freq_support);
  const std::size_t count = sample_count(grid, layout);

  const double span = 2.0 * pi / grid.step;
  const Interval support = spec.time_support.hull();
  if (span < support.length() * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "frequency step " << grid.step << " gives a time span " << span
        << " shorter than the time support " << support.length() << "; refine the frequency grid";
    throw CoverageError(msg.str());
  }

  const Interval fh = spec.freq_support.hull();
  const double reach = std::max({std::abs(grid.start), std::abs(grid.end()), std::abs(fh.lo), std::abs(fh.hi)});
  const double dt_max = pi / (2.0 * reach);
  const double needed = std::max(static_cast<double>(count), span / dt_max);
  if (needed > static_cast<double>(kMaxTransformPoints)) {
    std::ostringstream msg;
    msg << "transform fallback needs " << needed << " points (limit " << kMaxTransformPoints
        << "); resolution insufficient";
    throw CoverageError(msg.str());
  }
  const std::size_t n = std::bit_ceil(static_cast<std::size_t>(std::ceil(needed)));
  const double dt = span / static_cast<double>(n);
  const double t0 = support.mid() - 0.5 * span + 0.5 * dt;
  const double w0 = sample_position(grid, layout, 0);

  const std::vector<Complex> spectrum = sampled_spectrum(spec, t0, dt, n, w0);
  std::vector<double> values(count);
  kernels::squared_modulus({spectrum.data(), count}, values, 1.0 / (2.0 * pi));
  return make_density(grid, std::move(values), Domain::frequency, layout, tail_of(spec.freq_support));
}

std::vector<double> cdf(const SampledDensity& d) {
  std::vector<double> out(d.grid.count, 0.0);
  const double h = d.grid.step;
  for (std::size_t i = 0; i + 1 < d.grid.count; ++i) {
    const double inc = d.layout == Layout::cells ? h * d.values[i] : 0.5 * h * (d.values[i] + d.values[i + 1]);
    out[i + 1] = out[i] + inc;
  }
  return out;
}

double energy(const WaveletSpec& spec, const GridOptions& opt) {
  return time_density(spec, default_time_grid(spec, opt)).total_mass();
}

}  // namespace wavent
