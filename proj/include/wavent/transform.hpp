#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wavent/catalog.hpp"

namespace wavent {

/// Uniform grid of `count` nodes: start, start + step, ..., start + step*(count-1).
struct Grid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 2;

  Grid() = default;
  Grid(double start, double step, std::size_t count);

  /// [lo, hi] split into `intervals` equal pieces (intervals + 1 nodes).
  static Grid spanning(Interval span, std::size_t intervals);

  double at(std::size_t i) const { return start + step * static_cast<double>(i); }
  double end() const { return at(count - 1); }
  std::size_t intervals() const { return count - 1; }
  bool covers(Interval support) const;
  bool operator==(const Grid&) const = default;
};

enum class Domain { time, frequency };
std::string_view to_string(Domain d);
Domain domain_from_string(std::string_view s);

/// nodes: values[i] is the density at grid.at(i), integrated by trapezoid.
/// cells: values[i] is the density on [at(i), at(i+1)], integrated by cell sums
///        (exact for piecewise-constant densities with breakpoints on nodes).
enum class Layout { nodes, cells };
std::string_view to_string(Layout l);
Layout layout_from_string(std::string_view s);

/// Algebraic tail p(x) = A(x)/(x - center)^2 beyond both grid ends.
struct TailModel {
  double period = 0.0;
  double center = 0.0;
  bool operator==(const TailModel&) const = default;
};

/// Tail contribution on both sides of the grid, in nats.
struct TailEstimate {
  double mass = 0.0;
  double neg_plogp = 0.0;
  double error = 0.0;
};

struct SampledDensity {
  Grid grid;
  std::vector<double> values;
  Domain domain = Domain::time;
  Layout layout = Layout::nodes;
  std::optional<TailModel> tail;
  double mass = 0.0;       // quadrature over the grid only
  double tail_mass = 0.0;  // tail-model estimate of the mass outside the grid
  double truncation_error_estimate = 0.0;

  double coordinate(std::size_t i) const;
  double total_mass() const { return mass + tail_mass; }
  /// |total_mass - 1| <= 1e-6 and |mass - 1| <= max(1e-6, truncation_error_estimate).
  bool normalized(double tolerance = 1e-6) const;
};

/// Fills mass/tail fields; throws InvalidArgument on negative or non-finite values.
SampledDensity make_density(Grid grid, std::vector<double> values, Domain domain, Layout layout,
                            std::optional<TailModel> tail = std::nullopt);

/// Quadrature of an arbitrary sampled integrand in the density's layout.
double integrate(const SampledDensity& layout_of, std::span<const double> integrand);

/// Tail integrals of p and -p ln p from the last period of samples on each side.
TailEstimate estimate_tail(const SampledDensity& d);
/// Tail integral of p^s (s > 1/2); +inf for s <= 1/2.
double estimate_tail_power(const SampledDensity& d, double s);

/// Same density on every other node (nodes) or with merged cell pairs (cells).
SampledDensity coarsen(const SampledDensity& d);

struct GridOptions {
  std::size_t intervals = 0;  // 0: default for the decay class; else a power of two
  double half_width = 0.0;    // 0: default; measured from the support centre
};

Grid default_time_grid(const WaveletSpec& spec, const GridOptions& opt = {});
Grid default_frequency_grid(const WaveletSpec& spec, const GridOptions& opt = {});

/// p_t(t) = |psi(t)|^2. Throws CoverageError if the grid misses the support.
SampledDensity time_density(const WaveletSpec& spec, const Grid& grid);

/// p_f(w) = |Psi(w)|^2 / 2pi from the closed form when present, else via
/// frequency_density_by_transform.
SampledDensity frequency_density(const WaveletSpec& spec, const Grid& grid);

/// Numeric route: dense power-of-two time sampling, FFT, scaling by the time
/// step. The time span is fixed by the requested frequency step
/// (T = 2pi/step); throws CoverageError when T cannot hold the time support or
/// the needed FFT exceeds 2^24 points.
SampledDensity frequency_density_by_transform(const WaveletSpec& spec, const Grid& grid);

/// Running integral on the grid nodes; last value is `mass`.
std::vector<double> cdf(const SampledDensity& d);

/// Integral of |psi|^2 over the effective support (tail-corrected).
double energy(const WaveletSpec& spec, const GridOptions& opt = {});

/// Spectrum samples Psi(w_k) from an FFT of time samples taken on
/// [t0, t0 + n*dt), for w_k = w0 + k*2pi/(n*dt), k < n.
std::vector<Complex> sampled_spectrum(const WaveletSpec& spec, double t0, double dt, std::size_t n,
                                      double w0);

}  // namespace wavent
