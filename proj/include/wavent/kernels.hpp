#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; an AVX2/FMA variant is selected at runtime when the CPU
// supports it. Both variants are equivalence-tested against each other.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace wavent::kernels {

struct EntropySums {
  double mass = 0.0;       // sum of p
  double neg_plogp = 0.0;  // sum of -p ln p, with 0 ln 0 = 0
};

// Values below DBL_MIN (including zero and negatives) contribute nothing to
// entropy_sums and power_sum in every variant.
struct KernelTable {
  std::string_view name;
  double (*sum)(const double* x, std::size_t n);
  EntropySums (*entropy_sums)(const double* p, std::size_t n);
  double (*power_sum)(const double* p, std::size_t n, double s);
  // out[i] = scale * |z[i]|^2
  void (*squared_modulus)(const std::complex<double>* z, double* out, std::size_t n, double scale);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[k] += sum_m taps[m] * x[k + m], k < n_out; x holds n_out + n_taps - 1 values
  void (*correlate_accumulate)(const double* x, const double* taps, std::size_t n_taps,
                               double* out, std::size_t n_out);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

/// The table used by the library. AVX2 when available unless the
/// environment variable WAVENT_KERNELS=scalar is set.
const KernelTable& active_kernels();

inline double sum(std::span<const double> x) { return active_kernels().sum(x.data(), x.size()); }

inline EntropySums entropy_sums(std::span<const double> p) {
  return active_kernels().entropy_sums(p.data(), p.size());
}

inline double power_sum(std::span<const double> p, double s) {
  return active_kernels().power_sum(p.data(), p.size(), s);
}

inline void squared_modulus(std::span<const std::complex<double>> z, std::span<double> out,
                            double scale = 1.0) {
  active_kernels().squared_modulus(z.data(), out.data(), z.size(), scale);
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline void correlate_accumulate(std::span<const double> x, std::span<const double> taps,
                                 std::span<double> out) {
  active_kernels().correlate_accumulate(x.data(), taps.data(), taps.size(), out.data(),
                                        out.size());
}

}  // namespace wavent::kernels
