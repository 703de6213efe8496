// wavent: entropy of continuous and MRA wavelets from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O failure.

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavent/catalog.hpp"
#include "wavent/entropy.hpp"
#include "wavent/error.hpp"
#include "wavent/filters.hpp"
#include "wavent/io.hpp"
#include "wavent/reference.hpp"
#include "wavent/transform.hpp"
#include "wavent/verify.hpp"

namespace {

using nlohmann::json;
using namespace wavent;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;

struct RunConfig {
  double half_width = 0.0;
  std::size_t samples = 0;
  double freq_half_width = 0.0;
  std::size_t freq_samples = 0;
  double base = kShannonBase;
  std::string format = "text";
  std::string out;
  double tolerance = 0.0;
  bool base_given = false;

  std::optional<double> alpha, w0, scale, shift;
};

ParamMap wavelet_params(const RunConfig& cfg) {
  ParamMap p;
  if (cfg.alpha) p["alpha"] = *cfg.alpha;
  if (cfg.w0) p["w0"] = *cfg.w0;
  if (cfg.scale) p["scale"] = *cfg.scale;
  if (cfg.shift) p["shift"] = *cfg.shift;
  return p;
}

ReportOptions report_options(const RunConfig& cfg) {
  ReportOptions o;
  o.time_grid = {cfg.samples, cfg.half_width};
  o.freq_grid = {cfg.freq_samples, cfg.freq_half_width};
  o.log_base = cfg.base;
  return o;
}

// Writes to --out when given, else stdout.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + cfg.out + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + cfg.out + "'");
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string label_of(const WaveletSpec& w) {
  std::string s = w.id;
  for (const auto& [k, v] : w.params) {
    if ((k == "scale" && v == 1.0) || (k == "shift" && v == 0.0)) continue;
    std::ostringstream os;
    os << ' ' << k << '=' << v;
    s += os.str();
  }
  return s;
}

int cmd_list(const RunConfig& cfg) {
  const json manifest = catalog_manifest();
  if (cfg.format == "json") {
    emit(cfg, manifest.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "kind,id,params\n";
  } else {
    os << "wavelets:\n";
  }
  for (const auto& e : catalog()) {
    std::string name = e.id;
    std::string ranges;
    if (!e.params.empty()) {
      name += "(";
      for (std::size_t i = 0; i < e.params.size(); ++i) {
        const auto& p = e.params[i];
        name += (i ? "," : "") + p.name;
        std::ostringstream r;
        r << (i ? "; " : "") << p.name << " in " << (p.lo_open ? "(" : "[") << p.lo << ", " << p.hi
          << "] default " << p.default_value;
        ranges += r.str();
      }
      name += ")";
    }
    if (cfg.format == "csv") {
      os << "wavelet," << name << ",\"" << ranges << "\"\n";
    } else {
      os << "  " << std::left << std::setw(14) << name << e.description;
      if (!ranges.empty()) os << "  [" << ranges << "]";
      os << "\n";
    }
  }
  if (cfg.format != "csv") os << "filters:\n";
  for (const auto& r : filter_registry()) {
    if (cfg.format == "csv") {
      os << "filter," << to_string(r.family) << ",N " << r.min_order << ".." << r.max_order << "\n";
    } else {
      os << "  " << std::left << std::setw(14) << to_string(r.family) << "N " << r.min_order << ".."
         << r.max_order << "\n";
    }
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, const std::string& id) {
  const WaveletSpec w = get_wavelet(id, wavelet_params(cfg));
  const EntropyReport r = entropy_report(w, report_options(cfg));
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json(r).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "wavelet,h_time,h_freq,product,h_global,energy,temperature,err_h_time,err_h_freq\n"
       << id << ',' << std::setprecision(17) << r.h_time << ',' << r.h_freq << ',' << r.product << ','
       << r.h_global << ',' << r.energy << ',' << r.temperature << ',' << r.errors.h_time << ','
       << r.errors.h_freq << "\n";
  } else {
    os << "wavelet      " << label_of(w) << "\n"
       << "log base     " << r.log_base << "\n"
       << "H_t          " << fixed(r.h_time) << "  +/- " << sci(r.errors.h_time) << "\n"
       << "H_f          " << fixed(r.h_freq) << "  +/- " << sci(r.errors.h_freq) << "\n"
       << "H_t*H_f      " << fixed(r.product) << "  +/- " << sci(r.errors.product) << "\n"
       << "H_global     " << fixed(r.h_global) << "  +/- " << sci(r.errors.h_global) << "\n"
       << "energy       " << fixed(r.energy, 9) << "  +/- " << sci(r.errors.energy) << "\n"
       << "temperature  " << fixed(r.temperature) << "  +/- " << sci(r.errors.temperature) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_table2(const RunConfig& cfg) {
  const auto& rows = reference::entropy_table();
  std::vector<std::future<EntropyReport>> jobs;
  for (const auto& row : rows) {
    jobs.push_back(std::async(std::launch::async, [&row, &cfg] {
      return entropy_report(get_wavelet(row.wavelet_id, row.params), report_options(cfg));
    }));
  }
  std::vector<EntropyReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& p = rows[i];
      arr.push_back({{"label", p.label},
                     {"report", reports[i]},
                     {"reference", {p.h_time, p.h_freq, p.product, p.h_global}},
                     {"note", p.note}});
    }
    os << arr.dump(2) << "\n";
    emit(cfg, os.str());
    return kExitOk;
  }
  if (cfg.format == "csv") {
    os << "label,h_time,h_freq,product,h_global,d_h_time,d_h_freq,d_product,d_h_global,columns_ok\n";
  } else {
    os << std::left << std::setw(12) << "wavelet" << std::right << std::setw(12) << "H_t" << std::setw(12)
       << "H_f" << std::setw(12) << "H_t*H_f" << std::setw(12) << "H_t+H_f"
       << "   |delta| vs reference (H_t, H_f, product, global)   columns\n";
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& p = rows[i];
    const auto& r = reports[i];
    const double d[4] = {std::abs(r.h_time - p.h_time), std::abs(r.h_freq - p.h_freq),
                         std::abs(r.product - p.product), std::abs(r.h_global - p.h_global)};
    const bool cols_ok = r.product == r.h_time * r.h_freq && r.h_global == r.h_time + r.h_freq;
    if (cfg.format == "csv") {
      os << p.label << std::setprecision(17) << ',' << r.h_time << ',' << r.h_freq << ',' << r.product << ','
         << r.h_global;
      for (double v : d) os << ',' << sci(v);
      os << ',' << (cols_ok ? "OK" : "MISMATCH") << "\n";
    } else {
      os << format_report_row(p.label, r) << "   ";
      for (double v : d) os << ' ' << sci(v);
      os << "   " << (cols_ok ? "OK" : "MISMATCH") << "\n";
      if (!p.note.empty()) os << "             note: " << p.note << "\n";
    }
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_table3(const RunConfig& cfg) {
  std::ostringstream os;
  json arr = json::array();
  if (cfg.format == "csv") os << "label,h_mra,reference,delta\n";
  if (cfg.format == "text") {
    os << std::left << std::setw(14) << "filter" << std::right << std::setw(12) << "H_MRA" << std::setw(12)
       << "reference" << std::setw(12) << "|delta|" << "\n";
  }
  for (const auto& row : reference::mra_table()) {
    if (!row.reproducible) {
      if (cfg.format == "json") {
        arr.push_back({{"label", row.label}, {"reference", row.h_mra}, {"reproduced", false}});
      } else if (cfg.format == "csv") {
        os << row.label << ",," << fixed(row.h_mra) << ",not reproduced\n";
      } else {
        os << std::left << std::setw(14) << row.label << std::right << std::setw(12) << "-" << std::setw(12)
           << fixed(row.h_mra) << "   not reproduced\n";
      }
      continue;
    }
    const FilterBank bank = get_filters(row.family, row.order);
    const double h = mra_entropy(bank, cfg.base);
    const double delta = std::abs(h - row.h_mra);
    if (cfg.format == "json") {
      arr.push_back({{"label", row.label}, {"h_mra", h}, {"reference", row.h_mra}, {"reproduced", true}});
    } else if (cfg.format == "csv") {
      os << row.label << ',' << std::setprecision(17) << h << ',' << fixed(row.h_mra) << ',' << sci(delta) << "\n";
    } else {
      os << std::left << std::setw(14) << row.label << std::right << std::setw(12) << fixed(h) << std::setw(12)
         << fixed(row.h_mra) << std::setw(12) << sci(delta) << "\n";
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << "\n";
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_density(const RunConfig& cfg, const std::string& id, const std::string& domain_name) {
  const WaveletSpec w = get_wavelet(id, wavelet_params(cfg));
  const Domain domain = domain_from_string(domain_name);
  const GridOptions g{cfg.samples, cfg.half_width};
  const SampledDensity d = domain == Domain::time ? time_density(w, default_time_grid(w, g))
                                                  : frequency_density(w, default_frequency_grid(w, g));
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json(d).dump() << "\n";
  } else {
    write_density_csv(os, d);
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_renyi(const RunConfig& cfg, const std::string& id, double s, const std::string& domain_name) {
  const WaveletSpec w = get_wavelet(id, wavelet_params(cfg));
  const RenyiOrder order(s, cfg.base);
  const Domain domain = domain_from_string(domain_name);
  const GridOptions g{cfg.samples, cfg.half_width};
  const SampledDensity d = domain == Domain::time ? time_density(w, default_time_grid(w, g))
                                                  : frequency_density(w, default_frequency_grid(w, g));
  const Estimate e = renyi_entropy(d, order);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"wavelet", id}, {"domain", to_string(domain)}, {"s", s}, {"log_base", cfg.base},
               {"value", e.value}, {"error", e.error}}
              .dump(2)
       << "\n";
  } else if (cfg.format == "csv") {
    os << "wavelet,domain,s,value,error\n" << id << ',' << to_string(domain) << ',' << s << ','
       << std::setprecision(17) << e.value << ',' << e.error << "\n";
  } else {
    os << "H_s  " << fixed(e.value) << "  +/- " << sci(e.error) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_mra(const RunConfig& cfg, const std::string& family, int n) {
  const FilterBank bank = get_filters(family, n);
  const double h = mra_entropy(bank, cfg.base);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"bank", bank}, {"h_mra", h}, {"log_base", cfg.base}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "filter,h_mra\n" << bank.name() << ',' << std::setprecision(17) << h << "\n";
  } else {
    os << bank.name() << "  H_MRA " << fixed(h, 8) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_swt(const RunConfig& cfg, const std::string& path, const std::string& family, int n, int levels) {
  const std::vector<double> signal = read_signal_file(path);
  const FilterBank bank = get_filters(family, n);
  const std::vector<double> energies = dwt_energies(signal, bank, levels);
  const double base = cfg.base == kShannonBase && !cfg.base_given ? kNaturalBase : cfg.base;
  const double s = swt_entropy(energies, base);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"energies", energies}, {"s_wt", s}, {"log_base", base}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "level,energy\n";
    for (std::size_t j = 0; j < energies.size(); ++j) {
      os << (j + 1 == energies.size() ? std::string("approx") : std::to_string(j + 1)) << ','
         << std::setprecision(17) << energies[j] << "\n";
    }
  } else {
    for (std::size_t j = 0; j + 1 < energies.size(); ++j) os << "detail " << j + 1 << "  " << energies[j] << "\n";
    os << "approx    " << energies.back() << "\n" << "S_WT      " << fixed(s) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_cascade(const RunConfig& cfg, const std::string& family, int n, int iters) {
  const FilterBank bank = get_filters(family, n);
  const CascadeResult c = cascade(bank, iters);
  const SampledDensity d = c.density();
  const Estimate ht = shannon_entropy(d, cfg.base);
  const double hmra = mra_entropy(bank, cfg.base);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"bank", bank},     {"iterations", iters}, {"support_width", c.support_width()},
               {"h_time", ht.value}, {"h_time_error", ht.error}, {"h_mra", hmra}, {"density", d}}
              .dump()
       << "\n";
  } else if (cfg.format == "csv") {
    write_density_csv(os, d);
  } else {
    os << bank.name() << " cascade, " << iters << " iterations\n"
       << "support width  " << fixed(c.support_width()) << "\n"
       << "H_t            " << fixed(ht.value) << "  +/- " << sci(ht.error) << "\n"
       << "H_MRA          " << fixed(hmra) << "\n"
       << "difference     " << sci(ht.value - hmra) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.tolerance = cfg.tolerance;
  std::vector<CheckResult> results = run_property_suite(opt);
  bool ok = true;
  std::ostringstream os;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (cfg.format == "json") {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"worst", r.worst}, {"tolerance", r.tolerance},
                     {"detail", r.detail}});
    } else {
      os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  worst " << sci(r.worst) << " (tol " << sci(r.tolerance)
         << ") at " << r.detail << "\n";
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << "\n";
  emit(cfg, os.str());
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shannon, Renyi, Jumarie and MRA entropies of wavelets"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--base", cfg.base, "logarithm base (2: shannons, 2.718281828: nats)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out, "write output to this path instead of stdout");
  app.add_option("--half-width", cfg.half_width, "time (or selected domain) grid half-width")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "time (or selected domain) grid intervals, a power of two");
  app.add_option("--freq-half-width", cfg.freq_half_width, "frequency grid half-width for report")
      ->check(CLI::PositiveNumber);
  app.add_option("--freq-samples", cfg.freq_samples, "frequency grid intervals for report, a power of two");

  auto add_wavelet_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "cdeo roll-off in (0, 1/3]");
    sub->add_option("--w0", cfg.w0, "Morlet centre frequency");
    sub->add_option("--scale", cfg.scale, "daughter dilation a");
    sub->add_option("--shift", cfg.shift, "daughter translation b");
  };

  app.add_subcommand("list", "wavelet catalog and filter registry");

  std::string wavelet;
  std::string domain = "time";
  auto* report = app.add_subcommand("report", "time, frequency and global entropy of a wavelet");
  report->add_option("wavelet", wavelet, "wavelet id")->required();
  add_wavelet_params(report);

  app.add_subcommand("table2", "entropy table of the continuous catalog with deltas");
  app.add_subcommand("table3", "MRA entropy table with deltas");

  auto* density = app.add_subcommand("density", "sampled time or frequency density");
  density->add_option("wavelet", wavelet, "wavelet id")->required();
  density->add_option("domain", domain, "time or freq")->check(CLI::IsMember({"time", "freq", "frequency"}));
  add_wavelet_params(density);

  double s = 2.0;
  auto* renyi = app.add_subcommand("renyi", "Renyi entropy of order s");
  renyi->add_option("wavelet", wavelet, "wavelet id")->required();
  renyi->add_option("domain", domain, "time or freq")->check(CLI::IsMember({"time", "freq", "frequency"}));
  renyi->add_option("--s", s, "order s > 0, s != 1");
  add_wavelet_params(renyi);

  std::string family;
  int order = 1;
  auto* mra = app.add_subcommand("mra", "entropy of the squared high-pass taps");
  mra->add_option("family", family, "db, sym or coif")->required();
  mra->add_option("N", order, "vanishing moments")->required();

  std::string signal_path;
  int levels = 1;
  auto* swt = app.add_subcommand("swt", "relative level-energy entropy of a signal");
  swt->add_option("signal", signal_path, "CSV file, one sample per line")->required();
  swt->add_option("family", family, "db, sym or coif")->required();
  swt->add_option("N", order, "vanishing moments")->required();
  swt->add_option("--levels", levels, "decomposition levels")->check(CLI::PositiveNumber);

  int iters = 8;
  auto* casc = app.add_subcommand("cascade", "cascade approximation of psi and its entropy");
  casc->add_option("family", family, "db, sym or coif")->required();
  casc->add_option("N", order, "vanishing moments")->required();
  casc->add_option("--iters", iters, "refinement iterations")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--tolerance", cfg.tolerance, "override for the entropy-difference properties")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgs;
  }
  cfg.base_given = app.get_option("--base")->count() > 0;
  if (!(cfg.base > 1.0)) {
    std::cerr << "error: --base must be > 1\n";
    return kExitArgs;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list(cfg);
    if (app.got_subcommand(report)) return cmd_report(cfg, wavelet);
    if (app.got_subcommand("table2")) return cmd_table2(cfg);
    if (app.got_subcommand("table3")) return cmd_table3(cfg);
    if (app.got_subcommand(density)) return cmd_density(cfg, wavelet, domain);
    if (app.got_subcommand(renyi)) return cmd_renyi(cfg, wavelet, s, domain);
    if (app.got_subcommand(mra)) return cmd_mra(cfg, family, order);
    if (app.got_subcommand(swt)) return cmd_swt(cfg, signal_path, family, order, levels);
    if (app.got_subcommand(casc)) return cmd_cascade(cfg, family, order, iters);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const CoverageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitArgs;
}
