#include "wavent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "wavent/error.hpp"
#include "wavent/filters.hpp"

namespace wavent {
namespace {

const double kScales[] = {0.5, 2.0, 3.0};
const double kShifts[] = {0.0, 1.0, -5.0};

struct Tracker {
  CheckResult r;
  Tracker(std::string name, double tolerance) {
    r.name = std::move(name);
    r.tolerance = tolerance;
    r.passed = true;
  }
  bool strict = false;  // inequalities must hold with a negative margin

  // Records a deviation; fails when it is not within tolerance.
  void deviation(double value, const std::string& where) {
    if (!(std::abs(value) <= r.tolerance)) r.passed = false;
    if (r.detail.empty() || std::isnan(value) || std::abs(value) > std::abs(r.worst)) {
      r.worst = value;
      r.detail = where;
    }
  }
  // Records lhs <= rhs + tolerance (lhs < rhs when strict).
  void at_most(double lhs, double rhs, const std::string& where) {
    const double margin = lhs - rhs;
    const bool ok = strict ? margin < 0.0 : margin <= r.tolerance;
    if (!ok) r.passed = false;
    if (r.detail.empty() || std::isnan(margin) || margin > r.worst) {
      r.worst = margin;
      r.detail = where;
    }
  }
  void error(const std::string& what) {
    r.passed = false;
    r.detail = what;
  }
};

std::string label(const WaveletSpec& w) {
  std::ostringstream s;
  s << w.id;
  for (const auto& [k, v] : w.params) {
    if ((k == "scale" && v == 1.0) || (k == "shift" && v == 0.0)) continue;
    s << ' ' << k << '=' << v;
  }
  return s.str();
}

struct FamilyReports {
  WaveletSpec mother;
  EntropyReport base;
  // [scale index][shift index]
  std::vector<std::vector<EntropyReport>> daughters;
};

FamilyReports family_reports(const WaveletSpec& mother) {
  FamilyReports f{mother, entropy_report(mother), {}};
  for (double a : kScales) {
    std::vector<EntropyReport> row;
    for (double b : kShifts) row.push_back(entropy_report(daughter(mother, a, b)));
    f.daughters.push_back(std::move(row));
  }
  return f;
}

std::vector<FamilyReports> all_family_reports(const std::vector<WaveletSpec>& wavelets) {
  std::vector<std::future<FamilyReports>> jobs;
  for (const auto& w : wavelets) jobs.push_back(std::async(std::launch::async, family_reports, w));
  std::vector<FamilyReports> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

double tol_or(const VerifyOptions& opt, double fallback) { return opt.tolerance > 0.0 ? opt.tolerance : fallback; }

void check_scaling(const std::vector<FamilyReports>& fams, Tracker& t) {
  for (const auto& f : fams) {
    for (std::size_t i = 0; i < std::size(kScales); ++i) {
      const auto [ht, hf] = predict_daughter_entropy(f.base.h_time, f.base.h_freq, kScales[i]);
      const EntropyReport& d = f.daughters[i][0];
      std::ostringstream w;
      w << label(f.mother) << " a=" << kScales[i];
      t.deviation(d.h_time - ht, w.str() + " time");
      t.deviation(d.h_freq - hf, w.str() + " frequency");
    }
  }
}

void check_conservation(const std::vector<FamilyReports>& fams, Tracker& t) {
  for (const auto& f : fams) {
    for (std::size_t i = 0; i < std::size(kScales); ++i) {
      for (std::size_t j = 0; j < std::size(kShifts); ++j) {
        std::ostringstream w;
        w << label(f.mother) << " a=" << kScales[i] << " b=" << kShifts[j];
        t.deviation(f.daughters[i][j].h_global - f.base.h_global, w.str());
      }
    }
  }
}

bool time_compact(const WaveletSpec& w) { return w.time_support.decay == Decay::compact; }

double support_length(const SupportInfo& s) {
  double len = 0.0;
  for (const auto& b : s.bands) len += b.length();
  return len;
}

void check_support_bound(const std::vector<FamilyReports>& fams, Tracker& bound, Tracker& equality) {
  for (const auto& f : fams) {
    if (!time_compact(f.mother)) continue;
    const double len = support_length(f.mother.time_support);
    bound.at_most(f.base.h_time, std::log2(len), label(f.mother));
    if (f.mother.id == "haar") equality.deviation(f.base.h_time - std::log2(len), "haar");
    for (std::size_t i = 0; i < std::size(kScales); ++i) {
      for (std::size_t j = 0; j < std::size(kShifts); ++j) {
        const double dlen = len * kScales[i];
        std::ostringstream w;
        w << label(f.mother) << " a=" << kScales[i] << " b=" << kShifts[j];
        bound.at_most(f.daughters[i][j].h_time, std::log2(dlen), w.str());
        if (f.mother.id == "haar") equality.deviation(f.daughters[i][j].h_time - std::log2(dlen), w.str());
      }
    }
  }
  for (const auto& range : filter_registry()) {
    for (int n = range.min_order; n <= range.max_order; ++n) {
      const CascadeResult c = cascade(get_filters(range.family, n));
      const double h = shannon_entropy(c.density()).value;
      bound.at_most(h, std::log2(c.support_width()), "cascade " + c.bank.name());
    }
  }
}

void check_daubechies_bound(Tracker& mra, Tracker& continuous) {
  for (int n = 1; n <= 4; ++n) {
    const FilterBank bank = get_filters(FilterFamily::db, n);
    const double bound = std::log2(2.0 * n - 1.0);
    if (n >= 2) mra.at_most(mra_entropy(bank), bound, bank.name());
    const double h = shannon_entropy(cascade(bank).density(), kNaturalBase).value / std::numbers::ln2;
    continuous.at_most(h, bound, "cascade " + bank.name());
  }
}

void check_isoresolution(const std::vector<FamilyReports>& fams, Tracker& t) {
  for (const auto& f : fams) {
    if (f.mother.id != "cmor" && f.mother.id != "gauss1") continue;
    t.deviation(f.base.h_time - f.base.h_freq, label(f.mother));
  }
}

void check_product_bound(const std::vector<FamilyReports>& fams, Tracker& t) {
  auto one = [&](const EntropyReport& r, const std::string& w) {
    t.at_most(r.product, r.h_global * r.h_global / 4.0, w);
  };
  for (const auto& f : fams) {
    one(f.base, label(f.mother));
    for (std::size_t i = 0; i < std::size(kScales); ++i) {
      for (std::size_t j = 0; j < std::size(kShifts); ++j) {
        std::ostringstream w;
        w << label(f.mother) << " a=" << kScales[i] << " b=" << kShifts[j];
        one(f.daughters[i][j], w.str());
      }
    }
  }
}

void check_renyi_and_jumarie(const std::vector<WaveletSpec>& wavelets, Tracker& renyi, Tracker& jumarie,
                             Tracker& plancherel) {
  for (const auto& w : wavelets) {
    const SampledDensity pt = time_density(w, default_time_grid(w));
    const SampledDensity pf = frequency_density(w, default_frequency_grid(w));
    plancherel.deviation(pt.total_mass() - 1.0, label(w) + " time");
    plancherel.deviation(pf.total_mass() - 1.0, label(w) + " frequency");
    for (const auto* d : {&pt, &pf}) {
      const double h = shannon_entropy(*d).value;
      for (double s : {0.999, 1.001}) {
        std::ostringstream where;
        where << label(w) << ' ' << to_string(d->domain) << " s=" << s;
        renyi.deviation(renyi_entropy(*d, RenyiOrder(s)).value - h, where.str());
      }
    }
    jumarie.deviation(jumarie_entropy(cdf(pt), pt.grid) - shannon_entropy(pt).value, label(w));
  }
}

void check_pyramid(const VerifyOptions& opt, Tracker& t) {
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> log_len(4, 10);
  std::vector<FilterBank> banks;
  for (const auto& range : filter_registry()) {
    for (int n = range.min_order; n <= range.max_order; ++n) banks.push_back(get_filters(range.family, n));
  }
  std::uniform_int_distribution<std::size_t> pick(0, banks.size() - 1);
  for (int trial = 0; trial < opt.random_signals; ++trial) {
    const int k = log_len(rng);
    std::vector<double> x(std::size_t{1} << k);
    double e = 0.0;
    for (double& v : x) {
      v = normal(rng);
      e += v * v;
    }
    for (double& v : x) v /= std::sqrt(e);
    const FilterBank& bank = banks[pick(rng)];
    const int levels = std::uniform_int_distribution<int>(1, k)(rng);
    const std::vector<double> energies = dwt_energies(x, bank, levels);
    double total = 0.0;
    for (double v : energies) total += v;
    std::ostringstream where;
    where << "signal " << trial << " n=" << x.size() << ' ' << bank.name() << " levels=" << levels;
    t.deviation(total - 1.0, where.str());
  }
}

void check_filters(Tracker& invariants, Tracker& hg) {
  for (const auto& range : filter_registry()) {
    for (int n = range.min_order; n <= range.max_order; ++n) {
      FilterBank bank;
      try {
        bank = get_filters(range.family, n);
        validate(bank);
        invariants.deviation(0.0, bank.name());
      } catch (const std::exception& e) {
        invariants.error(e.what());
        continue;
      }
      hg.deviation(coefficient_entropy(bank.h) - coefficient_entropy(bank.g), bank.name());
    }
  }
}

void check_cdeo_bound(const std::vector<FamilyReports>& fams, Tracker& entropy, Tracker& support) {
  for (const auto& f : fams) {
    if (f.mother.id != "cdeo") continue;
    const double alpha = f.mother.param("alpha");
    const double len = std::numbers::pi * (1.0 + 3.0 * alpha);
    const double bound = std::log2(len);
    entropy.at_most(f.base.h_freq, bound, label(f.mother));
    const Grid g = default_frequency_grid(f.mother);
    const SampledDensity pf = frequency_density(f.mother, g);
    // Each positive node stands for one step of support; the count is within
    // one step of the true length when the band edges fall between nodes.
    std::size_t positive = 0;
    for (double v : pf.values) positive += v > 0.0 ? 1 : 0;
    const double measured = static_cast<double>(positive) * g.step;
    support.deviation((measured - len) / g.step, label(f.mother) + " (in grid steps)");
  }
}

void guard(std::vector<CheckResult>& out, const std::string& name, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = name;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
    out.push_back(r);
  }
}

}  // namespace

std::vector<WaveletSpec> reference_wavelets() {
  std::vector<WaveletSpec> out;
  for (const auto& entry : catalog()) {
    if (entry.id == "cdeo") {
      for (double alpha : {0.1, 0.2}) out.push_back(get_wavelet(entry.id, {{"alpha", alpha}}));
    } else {
      out.push_back(get_wavelet(entry.id));
    }
  }
  return out;
}

std::vector<CheckResult> run_property_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::vector<WaveletSpec> wavelets;
  std::vector<FamilyReports> fams;
  guard(out, "catalog registration", [&] {
    wavelets = reference_wavelets();
    fams = all_family_reports(wavelets);
  });
  if (!out.empty()) return out;

  const double scale_tol = tol_or(opt, 1e-3);
  const double cons_tol = tol_or(opt, 2e-3);
  const double iso_tol = tol_or(opt, 2e-3);
  const double renyi_tol = tol_or(opt, 1e-2);
  const double jumarie_tol = tol_or(opt, 2e-3);

  Tracker scaling("scaling law: H(daughter) - H(mother) = +/-log2|a|", scale_tol);
  check_scaling(fams, scaling);
  out.push_back(scaling.r);

  Tracker conservation("global entropy conserved under dilation and shift", cons_tol);
  check_conservation(fams, conservation);
  out.push_back(conservation.r);

  Tracker bound("support bound: H_t <= log2 |support|", 1e-6);
  Tracker equality("support bound attained by haar", 1e-9);
  guard(out, bound.r.name, [&] { check_support_bound(fams, bound, equality); });
  out.push_back(bound.r);
  out.push_back(equality.r);

  Tracker db_mra("daubechies bound on H_MRA(dbN), N = 2..4", 1e-12);
  Tracker db_cascade("daubechies bound on cascade H_t(dbN), N = 1..4", 1e-9);
  check_daubechies_bound(db_mra, db_cascade);
  out.push_back(db_mra.r);
  out.push_back(db_cascade.r);

  Tracker iso("isoresolution |H_t - H_f| for cmor and gauss1", iso_tol);
  check_isoresolution(fams, iso);
  out.push_back(iso.r);

  Tracker product("product bound H_t*H_f <= (H_t+H_f)^2/4", 0.0);
  check_product_bound(fams, product);
  out.push_back(product.r);

  Tracker renyi("Renyi entropy tends to Shannon at s = 1 -/+ 1e-3", renyi_tol);
  Tracker jumarie("Jumarie entropy of the CDF equals the time entropy", jumarie_tol);
  Tracker plancherel("Plancherel: unit mass in time and frequency", 1e-6);
  guard(out, renyi.r.name, [&] { check_renyi_and_jumarie(wavelets, renyi, jumarie, plancherel); });
  out.push_back(plancherel.r);
  out.push_back(renyi.r);
  out.push_back(jumarie.r);

  Tracker pyramid("pyramid energy conservation over seeded random signals", 1e-10);
  check_pyramid(opt, pyramid);
  out.push_back(pyramid.r);

  Tracker invariants("filter bank invariants", 1e-12);
  Tracker hg("H_MRA from h equals H_MRA from g", 1e-12);
  check_filters(invariants, hg);
  out.push_back(invariants.r);
  out.push_back(hg.r);

  Tracker cdeo_entropy("cdeo frequency entropy below log2(pi + 3 pi alpha)", 0.0);
  cdeo_entropy.strict = true;
  Tracker cdeo_support("cdeo spectral support length pi(1 + 3 alpha)", 1.0 + 1e-9);
  check_cdeo_bound(fams, cdeo_entropy, cdeo_support);
  out.push_back(cdeo_entropy.r);
  out.push_back(cdeo_support.r);
  return out;
}

std::vector<CheckResult> convergence_checks(double log_base) {
  std::vector<WaveletSpec> wavelets = reference_wavelets();
  auto one = [log_base](const WaveletSpec& w) {
    ReportOptions base;
    base.log_base = log_base;
    const EntropyReport coarse = entropy_report(w, base);
    ReportOptions fine = base;
    fine.time_grid.intervals = 2 * default_time_grid(w).intervals();
    fine.freq_grid.intervals = 2 * default_frequency_grid(w).intervals();
    const EntropyReport dense = entropy_report(w, fine);
    CheckResult r;
    r.name = "grid doubling within error estimate: " + label(w);
    const double dt = std::abs(dense.h_time - coarse.h_time);
    const double df = std::abs(dense.h_freq - coarse.h_freq);
    const double rt = coarse.errors.h_time > 0.0 ? dt / coarse.errors.h_time : (dt > 0.0 ? INFINITY : 0.0);
    const double rf = coarse.errors.h_freq > 0.0 ? df / coarse.errors.h_freq : (df > 0.0 ? INFINITY : 0.0);
    r.worst = std::max(rt, rf);
    r.tolerance = 1.0;
    r.passed = dt < coarse.errors.h_time && df < coarse.errors.h_freq;
    std::ostringstream d;
    d.precision(3);
    d << std::scientific << "time change " << dt << " vs estimate " << coarse.errors.h_time
      << "; frequency change " << df << " vs estimate " << coarse.errors.h_freq;
    r.detail = d.str();
    return r;
  };
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& w : wavelets) jobs.push_back(std::async(std::launch::async, one, w));
  std::vector<CheckResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace wavent
