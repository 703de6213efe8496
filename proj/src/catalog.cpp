#include "wavent/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavent/error.hpp"
#include "wavent/transform.hpp"

namespace wavent {
namespace {

using std::numbers::pi;
constexpr Complex kJ{0.0, 1.0};

// Effective half-widths used for truncation.
constexpr double kGaussianHalfWidth = 16.0;
constexpr double kSincHalfWidth = 4096.0;
constexpr double kQuarticHalfWidth = 512.0;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - (pi * x) * (pi * x) / 6.0;
  return std::sin(pi * x) / (pi * x);
}

// (e^{jx} - 1) / (jx), stable at x = 0.
Complex expm1_over(double x) {
  const double half = 0.5 * x;
  const double ratio = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
  return std::polar(ratio, half);
}

// Integral over [0, len] of sin(k u + phase) e^{j t u} du.
Complex sine_piece(double len, double k, double phase, double t) {
  const Complex plus = std::polar(1.0, phase) * len * expm1_over((t + k) * len);
  const Complex minus = std::polar(1.0, -phase) * len * expm1_over((t - k) * len);
  return (plus - minus) / (2.0 * kJ);
}

SupportInfo effective(double center, double half_width, Decay decay, double period = 0.0) {
  SupportInfo s;
  s.bands = {{center - half_width, center + half_width}};
  s.decay = decay;
  s.tail_period = period;
  s.center = center;
  return s;
}

SupportInfo compact(std::vector<Interval> bands, bool piecewise_constant) {
  SupportInfo s;
  s.bands = std::move(bands);
  s.decay = Decay::compact;
  s.piecewise_constant = piecewise_constant;
  s.center = s.hull().mid();
  return s;
}

const double kQuarterRootPi = std::pow(pi, 0.25);

WaveletSpec make_cmor(double w0) {
  WaveletSpec s;
  s.id = "cmor";
  s.is_complex = true;
  s.time_fn = [w0](double t) { return std::polar(std::exp(-0.5 * t * t) / kQuarterRootPi, w0 * t); };
  s.spectrum_fn = [w0](double w) {
    const double d = w - w0;
    return Complex{std::sqrt(2.0) * kQuarterRootPi * std::exp(-0.5 * d * d), 0.0};
  };
  s.time_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  s.freq_support = effective(w0, kGaussianHalfWidth, Decay::gaussian);
  return s;
}

WaveletSpec make_mor(double w0) {
  WaveletSpec s;
  s.id = "mor";
  s.time_fn = [w0](double t) {
    return Complex{std::sqrt(2.0) * std::cos(w0 * t) * std::exp(-0.5 * t * t) / kQuarterRootPi, 0.0};
  };
  s.spectrum_fn = [w0](double w) {
    const double a = w - w0;
    const double b = w + w0;
    return Complex{kQuarterRootPi * (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b)), 0.0};
  };
  s.time_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  s.freq_support = effective(0.0, w0 + kGaussianHalfWidth, Decay::gaussian);
  return s;
}

WaveletSpec make_mexh() {
  WaveletSpec s;
  s.id = "mexh";
  const double c = 2.0 / (std::sqrt(3.0) * kQuarterRootPi);
  s.time_fn = [c](double t) { return Complex{c * (t * t - 1.0) * std::exp(-0.5 * t * t), 0.0}; };
  s.spectrum_fn = [c](double w) {
    return Complex{-c * std::sqrt(2.0 * pi) * w * w * std::exp(-0.5 * w * w), 0.0};
  };
  s.time_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  s.freq_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  return s;
}

WaveletSpec make_gauss1() {
  WaveletSpec s;
  s.id = "gauss1";
  s.time_fn = [](double t) {
    return Complex{std::sqrt(2.0) * t * std::exp(-0.5 * t * t) / kQuarterRootPi, 0.0};
  };
  s.spectrum_fn = [](double w) {
    return Complex{0.0, -2.0 * kQuarterRootPi * w * std::exp(-0.5 * w * w)};
  };
  s.time_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  s.freq_support = effective(0.0, kGaussianHalfWidth, Decay::gaussian);
  return s;
}

// Value of an indicator at a jump is the midpoint of the one-sided limits.
double band_indicator(double w, double lo, double hi) {
  if (w > lo && w < hi) return 1.0;
  if (w == lo || w == hi) return 0.5;
  return 0.0;
}

// (1/sqrt 2) sinc(t/2) e^{-j 2 pi t}: one band of width pi centred at -2pi.
WaveletSpec make_csha() {
  WaveletSpec s;
  s.id = "csha";
  s.is_complex = true;
  s.time_fn = [](double t) { return std::polar(sinc(0.5 * t) / std::sqrt(2.0), -2.0 * pi * t); };
  s.spectrum_fn = [](double w) {
    return Complex{std::sqrt(2.0) * band_indicator(w, -2.5 * pi, -1.5 * pi), 0.0};
  };
  s.time_support = effective(0.0, kSincHalfWidth, Decay::inverse_square, 2.0);
  s.freq_support = compact({{-2.5 * pi, -1.5 * pi}}, true);
  return s;
}

WaveletSpec make_sha() {
  WaveletSpec s;
  s.id = "sha";
  s.time_fn = [](double t) { return Complex{sinc(0.5 * t) * std::cos(1.5 * pi * t), 0.0}; };
  s.spectrum_fn = [](double w) {
    return Complex{band_indicator(std::abs(w), pi, 2.0 * pi), 0.0};
  };
  s.time_support = effective(0.0, kSincHalfWidth, Decay::inverse_square, 2.0);
  s.freq_support = compact({{-2.0 * pi, -pi}, {pi, 2.0 * pi}}, true);
  return s;
}

WaveletSpec make_haar() {
  WaveletSpec s;
  s.id = "haar";
  const double v = 1.0 / std::sqrt(2.0);
  s.time_fn = [v](double t) {
    if (t > 0.0 && t < 1.0) return Complex{v, 0.0};
    if (t > -1.0 && t < 0.0) return Complex{-v, 0.0};
    return Complex{0.0, 0.0};
  };
  // -j 2 sqrt(2) sin^2(w/2) / w
  s.spectrum_fn = [](double w) {
    const double half = 0.5 * w;
    const double sn = std::sin(half);
    const double ratio = std::abs(half) < 1e-8 ? 1.0 : sn / half;
    return Complex{0.0, -std::sqrt(2.0) * sn * ratio};
  };
  s.time_support = compact({{-1.0, 0.0}, {0.0, 1.0}}, true);
  s.freq_support = effective(0.0, kSincHalfWidth, Decay::inverse_square, 2.0 * pi);
  return s;
}

// Analytic wavelet with |Psi|^2 = 2 * raised-cosine band on
// [pi(1-a), 2pi(1+a)], delayed by 1/2.
WaveletSpec make_cdeo(double alpha) {
  WaveletSpec s;
  s.id = "cdeo";
  s.is_complex = true;
  const double w1 = pi * (1.0 - alpha);
  const double w2 = pi * (1.0 + alpha);
  const double w3 = 2.0 * pi * (1.0 - alpha);
  const double w4 = 2.0 * pi * (1.0 + alpha);
  const double rise = w2 - w1;
  const double flat = w3 - w2;
  const double fall = w4 - w3;
  const double k_rise = pi / (2.0 * rise);
  const double k_fall = pi / (2.0 * fall);

  s.spectrum_fn = [=](double w) {
    double shape = 0.0;
    if (w > w1 && w < w2) {
      shape = std::sin(k_rise * (w - w1));
    } else if (w >= w2 && w <= w3) {
      shape = 1.0;
    } else if (w > w3 && w < w4) {
      shape = std::cos(k_fall * (w - w3));
    }
    return std::sqrt(2.0) * shape * std::polar(1.0, -0.5 * w);
  };
  s.time_fn = [=](double t) {
    const double u = t - 0.5;
    Complex acc = std::polar(1.0, w1 * u) * sine_piece(rise, k_rise, 0.0, u);
    if (flat > 0.0) acc += std::polar(1.0, w2 * u) * flat * expm1_over(u * flat);
    acc += std::polar(1.0, w3 * u) * sine_piece(fall, k_fall, 0.5 * pi, u);
    return acc * (std::sqrt(2.0) / (2.0 * pi));
  };
  s.time_support = effective(0.5, kQuarticHalfWidth, Decay::inverse_quartic);
  s.freq_support = compact({{w1, w4}}, false);
  return s;
}

void reject_unknown(std::string_view id, const ParamMap& params,
                    const std::vector<ParamRange>& allowed) {
  for (const auto& [name, value] : params) {
    if (name == "scale" || name == "shift") continue;
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const ParamRange& r) { return r.name == name; });
    if (!known) {
      std::ostringstream msg;
      msg << "wavelet '" << id << "' has no parameter '" << name << "'";
      throw InvalidArgument(msg.str());
    }
  }
}

double resolve(const ParamMap& params, const ParamRange& range, std::string_view id) {
  const auto it = params.find(range.name);
  const double v = it == params.end() ? range.default_value : it->second;
  const bool above_lo = range.lo_open ? v > range.lo : v >= range.lo;
  if (!std::isfinite(v) || !above_lo || v > range.hi) {
    std::ostringstream msg;
    msg << "parameter " << range.name << "=" << v << " out of range for '" << id << "' ("
        << (range.lo_open ? "(" : "[") << range.lo << ", " << range.hi << "])";
    throw InvalidArgument(msg.str());
  }
  return v;
}

}  // namespace

std::string_view to_string(Decay d) {
  switch (d) {
    case Decay::compact: return "compact";
    case Decay::gaussian: return "gaussian";
    case Decay::inverse_square: return "inverse-square";
    case Decay::inverse_quartic: return "inverse-quartic";
  }
  return "compact";
}

Decay decay_from_string(std::string_view s) {
  for (Decay d : {Decay::compact, Decay::gaussian, Decay::inverse_square, Decay::inverse_quartic}) {
    if (to_string(d) == s) return d;
  }
  throw InvalidArgument("unknown decay class '" + std::string(s) + "'");
}

Interval SupportInfo::hull() const {
  Interval out{bands.front().lo, bands.front().hi};
  for (const auto& b : bands) {
    out.lo = std::min(out.lo, b.lo);
    out.hi = std::max(out.hi, b.hi);
  }
  return out;
}

SupportInfo SupportInfo::mapped(double scale, double shift) const {
  SupportInfo out = *this;
  for (auto& b : out.bands) {
    const double x0 = shift + scale * b.lo;
    const double x1 = shift + scale * b.hi;
    b = {std::min(x0, x1), std::max(x0, x1)};
  }
  std::sort(out.bands.begin(), out.bands.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  out.tail_period = tail_period * std::abs(scale);
  out.center = shift + scale * center;
  return out;
}

Complex WaveletSpec::spectrum(double w) const {
  if (!spectrum_fn) throw InvalidArgument("wavelet '" + id + "' has no closed-form spectrum");
  return (*spectrum_fn)(w);
}

double WaveletSpec::param(std::string_view name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("wavelet '" + id + "' has no parameter '" + std::string(name) + "'");
  return it->second;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"cmor", "complex Morlet e^{j w0 t} e^{-t^2/2} / pi^{1/4}", {{"w0", 5.0, 10.0, false, 5.0}}},
      {"mor", "real Morlet sqrt(2) cos(w0 t) e^{-t^2/2} / pi^{1/4}", {{"w0", 5.0, 10.0, false, 5.0}}},
      {"mexh", "Mexican hat (2/sqrt 3)(t^2-1) e^{-t^2/2} / pi^{1/4}", {}},
      {"gauss1", "first Gaussian derivative sqrt(2) t e^{-t^2/2} / pi^{1/4}", {}},
      {"csha", "complex Shannon (1/sqrt 2) sinc(t/2) e^{-j 2 pi t}", {}},
      {"sha", "real Shannon sinc(t/2) cos(3 pi t / 2)", {}},
      {"haar", "Haar, +-1/sqrt 2 on (-1, 1)", {}},
      {"cdeo", "analytic raised-cosine band wavelet [pi(1-alpha), 2pi(1+alpha)]",
       {{"alpha", 0.0, 1.0 / 3.0, true, 0.1}}},
  };
  return entries;
}

WaveletSpec make_wavelet(std::string_view id, const ParamMap& params) {
  const auto& entries = catalog();
  const auto entry = std::find_if(entries.begin(), entries.end(),
                                  [&](const CatalogEntry& e) { return e.id == id; });
  if (entry == entries.end()) throw InvalidArgument("unknown wavelet '" + std::string(id) + "'");
  reject_unknown(id, params, entry->params);

  ParamMap resolved;
  for (const auto& range : entry->params) resolved[range.name] = resolve(params, range, id);

  WaveletSpec spec;
  if (id == "cmor") spec = make_cmor(resolved.at("w0"));
  else if (id == "mor") spec = make_mor(resolved.at("w0"));
  else if (id == "mexh") spec = make_mexh();
  else if (id == "gauss1") spec = make_gauss1();
  else if (id == "csha") spec = make_csha();
  else if (id == "sha") spec = make_sha();
  else if (id == "haar") spec = make_haar();
  else spec = make_cdeo(resolved.at("alpha"));

  spec.params = resolved;
  spec.params["scale"] = 1.0;
  spec.params["shift"] = 0.0;

  const auto scale = params.find("scale");
  const auto shift = params.find("shift");
  const double a = scale == params.end() ? 1.0 : scale->second;
  const double b = shift == params.end() ? 0.0 : shift->second;
  if (a != 1.0 || b != 0.0) return daughter(spec, a, b);
  return spec;
}

WaveletSpec get_wavelet(std::string_view id, const ParamMap& params) {
  WaveletSpec spec = make_wavelet(id, params);
  validate_registration(spec);
  return spec;
}

WaveletSpec daughter(const WaveletSpec& spec, double a, double b) {
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("daughter scale must be a nonzero finite real");
  if (!std::isfinite(b)) throw InvalidArgument("daughter shift must be finite");

  WaveletSpec out = spec;
  const double amp = 1.0 / std::sqrt(std::abs(a));
  out.time_fn = [f = spec.time_fn, a, b, amp](double t) { return amp * f((t - b) / a); };
  if (spec.spectrum_fn) {
    out.spectrum_fn = [F = *spec.spectrum_fn, a, b](double w) {
      return std::sqrt(std::abs(a)) * F(a * w) * std::polar(1.0, -w * b);
    };
  }
  out.time_support = spec.time_support.mapped(a, b);
  out.freq_support = spec.freq_support.mapped(1.0 / a, 0.0);

  const double a0 = spec.params.count("scale") ? spec.params.at("scale") : 1.0;
  const double b0 = spec.params.count("shift") ? spec.params.at("shift") : 0.0;
  out.params["scale"] = a0 * a;
  out.params["shift"] = b + a * b0;
  return out;
}

WaveletSpec without_spectrum(const WaveletSpec& spec) {
  WaveletSpec out = spec;
  out.spectrum_fn.reset();
  return out;
}

void validate_registration(const WaveletSpec& spec) {
  auto fail = [&](const std::string& what, double got) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "wavelet '" << spec.id << "' failed registration: " << what << " (" << got << ")";
    throw NormalizationError(msg.str());
  };

  const double e = energy(spec);
  if (std::abs(e - 1.0) > 1e-6) fail("unit energy", e);

  if (!spec.spectrum_fn) return;

  const double at_zero = std::norm(spec.spectrum(0.0)) / (2.0 * std::numbers::pi);
  if (at_zero > 1e-6) fail("admissibility |Psi(0)|^2/2pi", at_zero);

  const SampledDensity pf = frequency_density(spec, default_frequency_grid(spec));
  if (std::abs(pf.total_mass() - 1.0) > 1e-6) fail("Plancherel mass", pf.total_mass());

  // Closed form against an FFT of the time samples.
  const Grid tg = default_time_grid(spec);
  constexpr std::size_t n = std::size_t{1} << 16;
  const double span = tg.end() - tg.start;
  const double dt = span / static_cast<double>(n);
  const double t0 = tg.start + 0.5 * dt;
  const double w0 = -std::numbers::pi / dt;
  const std::vector<Complex> numeric = sampled_spectrum(spec, t0, dt, n, w0);
  const double dw = 2.0 * std::numbers::pi / span;

  std::vector<double> edges;
  if (spec.freq_support.decay == Decay::compact) {
    for (const auto& band : spec.freq_support.bands) {
      edges.push_back(band.lo);
      edges.push_back(band.hi);
    }
  }
  double peak = 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = w0 + dw * static_cast<double>(k);
    const bool near_edge = std::any_of(edges.begin(), edges.end(),
                                       [w](double x) { return std::abs(w - x) < 1.0; });
    const Complex closed = spec.spectrum(w);
    peak = std::max(peak, std::abs(closed));
    if (!near_edge) worst = std::max(worst, std::abs(closed - numeric[k]));
  }
  if (worst > 1e-3 * peak) fail("closed-form spectrum vs numeric transform", worst / peak);
}

}  // namespace wavent
