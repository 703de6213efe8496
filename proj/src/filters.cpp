#include "wavent/filters.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "wavent/error.hpp"
#include "wavent/kernels.hpp"

namespace wavent {
namespace {

constexpr const char* kConvention =
    "orthonormal taps: sum h^2 = 1, sum h = sqrt(2), g_k = (-1)^k h_{L-1-k}";

std::vector<double> db2_taps() {
  const double r3 = std::sqrt(3.0);
  const double d = 4.0 * std::numbers::sqrt2;
  return {(1.0 + r3) / d, (3.0 + r3) / d, (3.0 - r3) / d, (1.0 - r3) / d};
}

// Low-pass reconstruction taps, 17 significant digits.
std::vector<double> taps(FilterFamily family, int order) {
  using enum FilterFamily;
  if (family == db || family == sym) {
    switch (order) {
      case 1: return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
      case 2: return db2_taps();
      case 3:
        return {0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458,
                -0.08544127388202666, 0.03522629188570953};
      default: break;
    }
  }
  if (family == db && order == 4) {
    return {0.2303778133088965,   0.7148465705529157,  0.6308807679298589, -0.027983769416859854,
            -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032};
  }
  if (family == sym && order == 4) {
    return {0.03222310060405212, -0.012603967262032107, -0.09921954357663255, 0.29785779560530856,
            0.8037387518051324,  0.49761866763277296,   -0.029635527646003884, -0.07576571478950246};
  }
  if (family == coif && order == 1) {
    return {-0.07273261951252645, 0.3378976624574818,  0.8525720202116004,
            0.3848648468648578,   -0.07273261951252645, -0.015655728135791993};
  }
  if (family == coif && order == 2) {
    return {0.01638733646320364,  -0.04146493678687178,  -0.0673725547237256,   0.3861100668227629,
            0.8127236354494135,   0.4170051844232391,    -0.07648859907828076,  -0.05943441864643109,
            0.02368017194684777,  0.005611434819368834,  -0.0018232088709110323, -0.000720549445520347};
  }
  std::ostringstream msg;
  msg << "unsupported filter " << to_string(family) << order;
  throw InvalidArgument(msg.str());
}

void fail(const FilterBank& bank, const std::string& what, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << bank.name() << ": " << what << " (got " << value << ")";
  throw NormalizationError(msg.str());
}

double sum_sq(std::span<const double> x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

// out[k] = sum_m taps[m] x[(2k + m) mod n] for k < n/2.
void analysis_step(std::span<const double> x, std::span<const double> taps, std::vector<double>& ext,
                   std::vector<double>& full, std::vector<double>& out) {
  const std::size_t n = x.size();
  ext.resize(n + taps.size());
  for (std::size_t i = 0; i < ext.size(); ++i) ext[i] = x[i % n];
  full.assign(n, 0.0);
  kernels::correlate_accumulate(ext, taps, full);
  out.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) out[k] = full[2 * k];
}

}  // namespace

std::string_view to_string(FilterFamily f) {
  switch (f) {
    case FilterFamily::db: return "db";
    case FilterFamily::sym: return "sym";
    case FilterFamily::coif: return "coif";
  }
  return "db";
}

FilterFamily filter_family_from_string(std::string_view s) {
  if (s == "db") return FilterFamily::db;
  if (s == "sym") return FilterFamily::sym;
  if (s == "coif") return FilterFamily::coif;
  throw InvalidArgument("unknown filter family '" + std::string(s) + "' (expected db, sym or coif)");
}

std::string FilterBank::name() const { return std::string(to_string(family)) + std::to_string(order); }

const std::vector<FilterRange>& filter_registry() {
  static const std::vector<FilterRange> registry = {
      {FilterFamily::db, 1, 4},
      {FilterFamily::sym, 1, 4},
      {FilterFamily::coif, 1, 2},
  };
  return registry;
}

std::vector<double> qmf(std::span<const double> h) {
  if (h.empty()) throw InvalidArgument("qmf of an empty filter");
  const std::size_t L = h.size();
  std::vector<double> g(L);
  for (std::size_t k = 0; k < L; ++k) g[k] = (k % 2 == 0 ? 1.0 : -1.0) * h[L - 1 - k];
  return g;
}

FilterBank get_filters(FilterFamily family, int order) {
  const auto& reg = filter_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const FilterRange& r) {
    return r.family == family && order >= r.min_order && order <= r.max_order;
  });
  if (it == reg.end()) {
    std::ostringstream msg;
    msg << "unsupported filter " << to_string(family) << order;
    throw InvalidArgument(msg.str());
  }
  FilterBank bank;
  bank.family = family;
  bank.order = order;
  bank.h = taps(family, order);
  bank.g = qmf(bank.h);
  bank.convention = kConvention;
  validate(bank);
  return bank;
}

FilterBank get_filters(std::string_view family, int order) {
  return get_filters(filter_family_from_string(family), order);
}

void validate(const FilterBank& bank, double tolerance) {
  if (bank.h.empty() || bank.h.size() != bank.g.size()) fail(bank, "h and g must be nonempty and equal length", 0);
  const double hh = sum_sq(bank.h);
  if (std::abs(hh - 1.0) > tolerance) fail(bank, "sum h^2 != 1", hh);
  const double gg = sum_sq(bank.g);
  if (std::abs(gg - 1.0) > tolerance) fail(bank, "sum g^2 != 1", gg);
  const double sh = std::accumulate(bank.h.begin(), bank.h.end(), 0.0);
  if (std::abs(sh - std::numbers::sqrt2) > tolerance) fail(bank, "sum h != sqrt(2)", sh);
  const double sg = std::accumulate(bank.g.begin(), bank.g.end(), 0.0);
  if (std::abs(sg) > tolerance) fail(bank, "sum g != 0", sg);
  const std::vector<double> expected = qmf(bank.h);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (std::abs(bank.g[k] - expected[k]) > tolerance) fail(bank, "g is not the QMF of h", bank.g[k]);
  }
}

std::vector<double> dwt_energies(std::span<const double> signal, const FilterBank& bank, int levels) {
  if (levels < 1) throw InvalidArgument("levels must be positive");
  if (!std::has_single_bit(signal.size())) throw InvalidArgument("signal length must be a power of two");
  if (signal.size() < (std::size_t{1} << levels)) {
    throw InvalidArgument("signal of length " + std::to_string(signal.size()) + " cannot support " +
                          std::to_string(levels) + " levels");
  }
  std::vector<double> approx(signal.begin(), signal.end());
  std::vector<double> ext, full, next, detail;
  std::vector<double> energies;
  energies.reserve(static_cast<std::size_t>(levels) + 1);
  for (int j = 0; j < levels; ++j) {
    analysis_step(approx, bank.g, ext, full, detail);
    analysis_step(approx, bank.h, ext, full, next);
    energies.push_back(sum_sq(detail));
    approx.swap(next);
  }
  energies.push_back(sum_sq(approx));
  return energies;
}

double CascadeResult::support_width() const { return grid.end() - grid.start; }

SampledDensity CascadeResult::density(double scale, double shift) const {
  if (scale == 0.0 || !std::isfinite(scale)) throw InvalidArgument("scale must be finite and nonzero");
  const double a = std::abs(scale);
  std::vector<double> p(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const std::size_t src = scale > 0 ? i : psi.size() - 1 - i;
    p[i] = psi[src] * psi[src] / a;
  }
  const double lo = scale > 0 ? shift + scale * grid.start : shift + scale * grid.end();
  return make_density(Grid(lo, a * grid.step, grid.count), std::move(p), Domain::time, Layout::cells);
}

CascadeResult cascade(const FilterBank& bank, int iterations) {
  if (iterations < 1 || iterations > 20) throw InvalidArgument("cascade iterations must be in 1..20");
  validate(bank);
  const std::size_t L = bank.h.size();
  const double r2 = std::numbers::sqrt2;

  // phi at level i has cells of width 2^-i on [0, L-1]; unit integral.
  std::vector<double> phi(L - 1, 1.0 / static_cast<double>(L - 1));
  auto refine = [&](const std::vector<double>& old, std::span<const double> coeffs, std::size_t stride) {
    std::vector<double> out(old.size() + (L - 1) * stride, 0.0);
    for (std::size_t l = 0; l < L; ++l) {
      std::span<double> dst(out.data() + l * stride, old.size());
      kernels::axpy(r2 * coeffs[l], old, dst);
    }
    return out;
  };
  for (int i = 1; i < iterations; ++i) phi = refine(phi, bank.h, std::size_t{1} << (i - 1));
  std::vector<double> psi = refine(phi, bank.g, std::size_t{1} << (iterations - 1));

  const double step = std::ldexp(1.0, -iterations);
  const double e = step * sum_sq(psi);
  if (!(e > 0.0)) throw NormalizationError("cascade produced a zero wavelet");
  const double norm = 1.0 / std::sqrt(e);
  for (double& v : psi) v *= norm;

  CascadeResult r;
  r.bank = bank;
  r.iterations = iterations;
  r.grid = Grid(0.0, step, psi.size() + 1);
  r.psi = std::move(psi);
  return r;
}

}  // namespace wavent
