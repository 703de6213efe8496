#include "wavent/reference.hpp"

#include <cmath>
#include <numbers>

namespace wavent::reference {

const std::vector<EntropyRow>& entropy_table() {
  static const std::vector<EntropyRow> rows = {
      {"CMor", "cmor", {}, 1.547096, 1.547096, 2.393506, 3.094191, ""},
      {"Mor", "mor", {}, 1.104425, 2.547095, 2.813075, 3.651520, ""},
      {"mexh", "mexh", {}, 1.715098, 1.988567, 3.410587, 3.703665, ""},
      {"Sinc", "csha", {}, 2.221052, 1.651383, 3.667807, 3.872435,
       "listed time function sinc(t)exp(-j2pi t) is inconsistent with the row; computed for the "
       "half-bandwidth form (1/sqrt2) sinc(t/2) exp(-j2pi t)"},
      {"gauss1", "gauss1", {}, 1.937147, 1.937147, 3.752538, 3.874293, ""},
      {"Sha", "sha", {}, 1.768634, 2.651665, 4.689824, 4.420299, ""},
      {"CdeO a=0.1", "cdeo", {{"alpha", 0.1}}, 3.045824, 1.818698, 5.539434, 4.864522, ""},
      {"CdeO a=0.2", "cdeo", {{"alpha", 0.2}}, 2.915276, 1.985887, 5.789408, 4.901163, ""},
      {"Haar", "haar", {}, 1.000000, 3.985653, 3.985653, 4.985653, ""},
  };
  return rows;
}

const std::vector<MraRow>& mra_table() {
  static const std::vector<MraRow> rows = {
      {"db1", "db", 1, 1.000000, true},   {"db2", "db", 2, 1.165857, true},
      {"db3", "db", 3, 1.397665, true},   {"db4", "db", 4, 1.447745, true},
      {"sym1", "sym", 1, 1.000000, true}, {"sym2", "sym", 2, 1.165857, true},
      {"sym3", "sym", 3, 1.397665, true}, {"sym4", "sym", 4, 1.345513, true},
      {"coif1", "coif", 1, 1.183011, true}, {"coif2", "coif", 2, 1.376543, true},
      {"mth nu=1 q=5", "", 0, 2.097353, false}, {"mth nu=5 q=5", "", 0, 1.739816, false},
  };
  return rows;
}

const std::vector<TemperatureRow>& temperature_table() {
  static const std::vector<TemperatureRow> rows = {
      {"cmor", 0.3232},
      {"mexh", 0.2700},
      {"haar", 0.2006},
  };
  return rows;
}

double gaussian_logon_entropy() { return std::log2(std::sqrt(std::numbers::pi * std::numbers::e)); }

const EntropyRow* find_entropy_row(const std::string& label) {
  for (const auto& r : entropy_table()) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

}  // namespace wavent::reference
