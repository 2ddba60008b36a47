// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace svineq::kernels::detail {
namespace {

// Two complex<double> per register, interleaved [re0, im0, re1, im1].
inline __m256d cmul(__m256d x, __m256d a_re, __m256d a_im) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(x, a_re, _mm256_mul_pd(swapped, a_im));
}

inline double* dptr(Complex* p) { return reinterpret_cast<double*>(p); }
inline const double* dptr(const Complex* p) { return reinterpret_cast<const double*>(p); }

void caxpy_avx2(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  const std::size_t n = x.size();
  const __m256d a_re = _mm256_set1_pd(a.real());
  const __m256d a_im = _mm256_set1_pd(a.imag());
  const double* xp = dptr(x.data());
  double* yp = dptr(y.data());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(xv, a_re, a_im)));
  }
  if (i < n) scalar().caxpy(a, x.subspan(i), y.subspan(i));
}

void rotate_pair_avx2(std::span<Complex> x, std::span<Complex> y, Complex alpha, Complex beta,
                      Complex gamma, Complex delta) {
  const std::size_t n = x.size();
  const __m256d al_re = _mm256_set1_pd(alpha.real()), al_im = _mm256_set1_pd(alpha.imag());
  const __m256d be_re = _mm256_set1_pd(beta.real()), be_im = _mm256_set1_pd(beta.imag());
  const __m256d ga_re = _mm256_set1_pd(gamma.real()), ga_im = _mm256_set1_pd(gamma.imag());
  const __m256d de_re = _mm256_set1_pd(delta.real()), de_im = _mm256_set1_pd(delta.imag());
  double* xp = dptr(x.data());
  double* yp = dptr(y.data());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    const __m256d xn = _mm256_add_pd(cmul(xv, al_re, al_im), cmul(yv, be_re, be_im));
    const __m256d yn = _mm256_add_pd(cmul(xv, ga_re, ga_im), cmul(yv, de_re, de_im));
    _mm256_storeu_pd(xp + 2 * i, xn);
    _mm256_storeu_pd(yp + 2 * i, yn);
  }
  if (i < n) scalar().rotate_pair(x.subspan(i), y.subspan(i), alpha, beta, gamma, delta);
}

double sum_abs2_avx2(std::span<const Complex> x) {
  const std::size_t n = x.size();
  const double* xp = dptr(x.data());
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  if (i < n) total += scalar().sum_abs2(x.subspan(i));
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", caxpy_avx2, rotate_pair_avx2, sum_abs2_avx2};
  return table;
}

}  // namespace svineq::kernels::detail
