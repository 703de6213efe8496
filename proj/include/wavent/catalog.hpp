#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavent {

using Complex = std::complex<double>;
using WaveFunction = std::function<Complex(double)>;
using ParamMap = std::map<std::string, double, std::less<>>;

/// How a density decays outside its effective support.
enum class Decay {
  compact,          // exactly zero outside the bands
  gaussian,         // truncation error negligible at the effective half-width
  inverse_square,   // p(x) = A(x) / (x - center)^2 with A periodic
  inverse_quartic,  // p(x) = O(x^-4)
};

std::string_view to_string(Decay d);
Decay decay_from_string(std::string_view s);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

/// Where a density lives. For compact decay the bands are exact; otherwise a
/// single band is the effective support used for truncation.
struct SupportInfo {
  std::vector<Interval> bands;
  Decay decay = Decay::compact;
  double tail_period = 0.0;  // period of A(x) for inverse_square tails
  double center = 0.0;       // origin of the algebraic tail
  bool piecewise_constant = false;

  Interval hull() const;
  /// Support under x -> shift + scale * x.
  SupportInfo mapped(double scale, double shift) const;
};

/// A catalog wavelet: evaluable time function with optional closed-form
/// spectrum, support metadata and parameters. Immutable once built; the
/// stored functions capture only constants so concurrent evaluation is safe.
///
/// Fourier convention: Psi(w) = integral psi(t) exp(-j w t) dt, w in rad/s.
struct WaveletSpec {
  std::string id;
  ParamMap params;  // family parameters plus "scale" and "shift"
  bool is_complex = false;
  WaveFunction time_fn;
  std::optional<WaveFunction> spectrum_fn;
  SupportInfo time_support;
  SupportInfo freq_support;

  Complex time(double t) const { return time_fn(t); }
  bool has_spectrum() const { return spectrum_fn.has_value(); }
  Complex spectrum(double w) const;
  double param(std::string_view name) const;
};

struct ParamRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = true;
  double default_value = 0.0;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<ParamRange> params;
};

const std::vector<CatalogEntry>& catalog();

/// Builds a catalog wavelet and checks unit energy, admissibility and
/// Plancherel (and cross-validates the closed-form spectrum against a
/// numeric transform). Throws InvalidArgument on unknown id or bad params.
WaveletSpec get_wavelet(std::string_view id, const ParamMap& params = {});

/// Builds the same wavelet without the numeric registration checks.
WaveletSpec make_wavelet(std::string_view id, const ParamMap& params = {});

/// psi_{a,b}(t) = |a|^{-1/2} psi((t-b)/a); spectrum |a|^{1/2} Psi(a w) e^{-j w b}.
WaveletSpec daughter(const WaveletSpec& spec, double a, double b);

/// Same wavelet with the closed-form spectrum removed, forcing the numeric
/// transform path in frequency_density.
WaveletSpec without_spectrum(const WaveletSpec& spec);

/// Registration checks; throws NormalizationError with a description.
void validate_registration(const WaveletSpec& spec);

}  // namespace wavent
