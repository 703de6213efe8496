// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime check in kernels_dispatch.cpp.

#include <immintrin.h>

#include <cfloat>
#include <cmath>
#include <cstdint>

#include "wavent/kernels.hpp"

namespace wavent::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// Natural log for positive normal inputs. Cephes rational approximation on
// the mantissa in [sqrt(1/2), sqrt(2)), exponent folded in with a split ln 2.
inline __m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_magic = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, exp_magic)),
                            splat(4503599627370496.0));
  e = _mm256_sub_pd(e, splat(1022.0));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i half_bits = _mm256_set1_epi64x(0x3FE0000000000000LL);
  const __m256d m =
      _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

  const __m256d below = _mm256_cmp_pd(m, splat(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(below, splat(1.0)));
  const __m256d r = _mm256_add_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_and_pd(below, m));

  __m256d num = splat(1.01875663804580931796E-4);
  num = _mm256_fmadd_pd(num, r, splat(4.97494994976747001425E-1));
  num = _mm256_fmadd_pd(num, r, splat(4.70579119878881725854E0));
  num = _mm256_fmadd_pd(num, r, splat(1.44989225341610930846E1));
  num = _mm256_fmadd_pd(num, r, splat(1.79368678507819816313E1));
  num = _mm256_fmadd_pd(num, r, splat(7.70838733755885391666E0));

  __m256d den = _mm256_add_pd(r, splat(1.12873587189167450590E1));
  den = _mm256_fmadd_pd(den, r, splat(4.52279145837532221105E1));
  den = _mm256_fmadd_pd(den, r, splat(8.29875266912776603211E1));
  den = _mm256_fmadd_pd(den, r, splat(7.11544750618563894466E1));
  den = _mm256_fmadd_pd(den, r, splat(2.31251620126765340583E1));

  const __m256d z = _mm256_mul_pd(r, r);
  __m256d y = _mm256_mul_pd(r, _mm256_div_pd(_mm256_mul_pd(z, num), den));
  y = _mm256_fmadd_pd(e, splat(-2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(splat(0.5), z, y);
  __m256d out = _mm256_add_pd(r, y);
  return _mm256_fmadd_pd(e, splat(0.693359375), out);
}

// exp for inputs in [-708, 709]; callers mask anything below.
inline __m256d exp_pd(__m256d x) {
  x = _mm256_min_pd(x, splat(709.0));
  x = _mm256_max_pd(x, splat(-708.0));
  const __m256d n = _mm256_floor_pd(_mm256_fmadd_pd(x, splat(1.4426950408889634073599), splat(0.5)));
  x = _mm256_fnmadd_pd(n, splat(6.93145751953125E-1), x);
  x = _mm256_fnmadd_pd(n, splat(1.42860682030941723212E-6), x);
  const __m256d xx = _mm256_mul_pd(x, x);

  __m256d p = splat(1.26177193074810590878E-4);
  p = _mm256_fmadd_pd(p, xx, splat(3.02994407707441961300E-2));
  p = _mm256_fmadd_pd(p, xx, splat(9.99999999999999999910E-1));
  p = _mm256_mul_pd(p, x);

  __m256d q = splat(3.00198505138664455042E-6);
  q = _mm256_fmadd_pd(q, xx, splat(2.52448340349684104192E-3));
  q = _mm256_fmadd_pd(q, xx, splat(2.27265548208155028766E-1));
  q = _mm256_fmadd_pd(q, xx, splat(2.00000000000000000009E0));

  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_fmadd_pd(splat(2.0), r, splat(1.0));

  // 2^n via the 1.5*2^52 rounding trick; |n| < 1100 here.
  const __m256d magic = splat(6755399441055744.0);
  const __m256i n64 = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(n, magic)),
                                       _mm256_castpd_si256(magic));
  const __m256i pow2 =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(r, _mm256_castsi256_pd(pow2));
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
    a2 = _mm256_add_pd(a2, _mm256_loadu_pd(x + i + 8));
    a3 = _mm256_add_pd(a3, _mm256_loadu_pd(x + i + 12));
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
  double acc = hsum(_mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

EntropySums entropy_sums_avx2(const double* p, std::size_t n) {
  __m256d mass = _mm256_setzero_pd();
  __m256d ent = _mm256_setzero_pd();
  const __m256d tiny = splat(DBL_MIN);
  const __m256d one = splat(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    const __m256d ok = _mm256_cmp_pd(v, tiny, _CMP_GE_OQ);
    const __m256d safe = _mm256_blendv_pd(one, v, ok);
    const __m256d vm = _mm256_and_pd(ok, v);
    mass = _mm256_add_pd(mass, vm);
    ent = _mm256_fnmadd_pd(vm, log_pd(safe), ent);
  }
  EntropySums out{hsum(mass), hsum(ent)};
  for (; i < n; ++i) {
    const double v = p[i];
    if (!(v >= DBL_MIN)) continue;
    out.mass += v;
    out.neg_plogp -= v * std::log(v);
  }
  return out;
}

double power_sum_avx2(const double* p, std::size_t n, double s) {
  __m256d acc = _mm256_setzero_pd();
  const __m256d tiny = splat(DBL_MIN);
  const __m256d one = splat(1.0);
  const __m256d vs = splat(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    const __m256d ok = _mm256_cmp_pd(v, tiny, _CMP_GE_OQ);
    const __m256d y = _mm256_mul_pd(vs, log_pd(_mm256_blendv_pd(one, v, ok)));
    const __m256d live = _mm256_and_pd(ok, _mm256_cmp_pd(y, splat(-708.0), _CMP_GE_OQ));
    acc = _mm256_add_pd(acc, _mm256_and_pd(live, exp_pd(y)));
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    const double v = p[i];
    if (!(v >= DBL_MIN)) continue;
    out += std::exp(s * std::log(v));
  }
  return out;
}

void squared_modulus_avx2(const std::complex<double>* z, double* out, std::size_t n,
                          double scale) {
  const double* raw = reinterpret_cast<const double*>(z);
  const __m256d vs = splat(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(raw + 2 * i);
    const __m256d b = _mm256_loadu_pd(raw + 2 * i + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    const __m256d ordered = _mm256_permute4x64_pd(h, 0b11011000);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, ordered));
  }
  for (; i < n; ++i) {
    const double re = z[i].real();
    const double im = z[i].imag();
    out[i] = scale * (re * re + im * im);
  }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = splat(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void correlate_accumulate_avx2(const double* x, const double* taps, std::size_t n_taps,
                               double* out, std::size_t n_out) {
  std::size_t k = 0;
  for (; k + 4 <= n_out; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t m = 0; m < n_taps; ++m) {
      acc = _mm256_fmadd_pd(splat(taps[m]), _mm256_loadu_pd(x + k + m), acc);
    }
    _mm256_storeu_pd(out + k, _mm256_add_pd(_mm256_loadu_pd(out + k), acc));
  }
  for (; k < n_out; ++k) {
    double acc = 0.0;
    for (std::size_t m = 0; m < n_taps; ++m) acc += taps[m] * x[k + m];
    out[k] += acc;
  }
}

}  // namespace

const KernelTable& avx2_kernels_impl() {
  static const KernelTable table{
      "avx2",          sum_avx2, entropy_sums_avx2,        power_sum_avx2,
      squared_modulus_avx2, axpy_avx2, correlate_accumulate_avx2,
  };
  return table;
}

}  // namespace wavent::kernels
