#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavent/transform.hpp"

namespace wavent {

enum class FilterFamily { db, sym, coif };
std::string_view to_string(FilterFamily f);
FilterFamily filter_family_from_string(std::string_view s);

/// Orthogonal MRA filter pair with the sqrt(2) absorbed into the taps:
/// sum h^2 = sum g^2 = 1, sum h = sqrt(2), sum g = 0,
/// phi(t) = sqrt(2) sum h_l phi(2t - l), psi(t) = sqrt(2) sum g_l phi(2t - l).
struct FilterBank {
  FilterFamily family = FilterFamily::db;
  int order = 1;  // vanishing moments N
  std::vector<double> h;
  std::vector<double> g;
  std::string convention;

  std::string name() const;  // "db2", "coif1", ...
  bool operator==(const FilterBank&) const = default;
};

struct FilterRange {
  FilterFamily family;
  int min_order;
  int max_order;
};
const std::vector<FilterRange>& filter_registry();

/// Throws InvalidArgument for an unsupported family/order.
FilterBank get_filters(FilterFamily family, int order);
FilterBank get_filters(std::string_view family, int order);

/// g_k = (-1)^k h_{L-1-k}.
std::vector<double> qmf(std::span<const double> h);

/// Throws NormalizationError describing the first violated invariant.
void validate(const FilterBank& bank, double tolerance = 1e-12);

/// Periodic analysis pyramid. Returns detail energies for levels 1..levels
/// followed by the final approximation energy.
std::vector<double> dwt_energies(std::span<const double> signal, const FilterBank& bank, int levels);

/// Cascade approximation of psi in natural MRA units (support [0, L-1]).
/// phi starts as the unit-integral box on [0, L-1] and is refined iterations-1 times;
/// one wavelet step then gives psi as piecewise-constant cells of width
/// 2^-iterations, normalized to unit energy.
struct CascadeResult {
  FilterBank bank;
  int iterations = 0;
  Grid grid;                // cell edges
  std::vector<double> psi;  // one value per cell

  double support_width() const;
  /// Density of the daughter psi_{a,b} of the cascade output.
  SampledDensity density(double scale = 1.0, double shift = 0.0) const;
};

CascadeResult cascade(const FilterBank& bank, int iterations = 8);

}  // namespace wavent
