#include "wavent/kernels.hpp"

#include <cfloat>
#include <cmath>

namespace wavent::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

EntropySums entropy_sums_scalar(const double* p, std::size_t n) {
  EntropySums out;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = p[i];
    if (!(v >= DBL_MIN)) continue;
    out.mass += v;
    out.neg_plogp -= v * std::log(v);
  }
  return out;
}

double power_sum_scalar(const double* p, std::size_t n, double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = p[i];
    if (!(v >= DBL_MIN)) continue;
    acc += std::exp(s * std::log(v));
  }
  return acc;
}

void squared_modulus_scalar(const std::complex<double>* z, double* out, std::size_t n,
                            double scale) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[i].real();
    const double im = z[i].imag();
    out[i] = scale * (re * re + im * im);
  }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void correlate_accumulate_scalar(const double* x, const double* taps, std::size_t n_taps,
                                 double* out, std::size_t n_out) {
  for (std::size_t k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (std::size_t m = 0; m < n_taps; ++m) acc += taps[m] * x[k + m];
    out[k] += acc;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",          sum_scalar, entropy_sums_scalar,        power_sum_scalar,
      squared_modulus_scalar, axpy_scalar, correlate_accumulate_scalar,
  };
  return table;
}

}  // namespace wavent::kernels
