#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "svineq/kernels.hpp"
#include "svineq/randgen.hpp"

using namespace svineq;

namespace {

std::vector<Complex> random_vector(PrngStream& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_gaussian();
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const kernels::KernelTable* simd_or_skip() { return kernels::avx2(); }

}  // namespace

TEST(Kernels, ActiveIsScalarOrAvx2) {
  const auto& active = kernels::active();
  if (kernels::avx2() != nullptr) {
    EXPECT_EQ(active.name, "avx2");
  } else {
    EXPECT_EQ(active.name, "scalar");
  }
}

TEST(Kernels, ScalarCaxpyMatchesComplexArithmetic) {
  PrngStream rng(1, 0);
  const auto x = random_vector(rng, 9);
  auto y = random_vector(rng, 9);
  const Complex a{0.3, -1.7};
  auto expected = y;
  for (std::size_t i = 0; i < x.size(); ++i) expected[i] += a * x[i];
  kernels::scalar().caxpy(a, x, y);
  EXPECT_LT(max_diff(y, expected), 1e-15);
}

TEST(Kernels, ScalarRotatePairIsTwoByTwoProduct) {
  PrngStream rng(2, 0);
  auto x = random_vector(rng, 5);
  auto y = random_vector(rng, 5);
  const Complex al{0.8, 0}, be{-0.36, 0.48}, ga{0.6, 0}, de{0.48, 0.64};
  std::vector<Complex> ex(5), ey(5);
  for (std::size_t i = 0; i < 5; ++i) {
    ex[i] = al * x[i] + be * y[i];
    ey[i] = ga * x[i] + de * y[i];
  }
  kernels::scalar().rotate_pair(x, y, al, be, ga, de);
  EXPECT_LT(max_diff(x, ex), 1e-15);
  EXPECT_LT(max_diff(y, ey), 1e-15);
}

TEST(Kernels, EmptySpansAreNoOps) {
  std::vector<Complex> none;
  EXPECT_EQ(kernels::scalar().sum_abs2(none), 0.0);
  EXPECT_EQ(kernels::active().sum_abs2(none), 0.0);
  kernels::active().caxpy({1, 1}, none, none);
  kernels::active().rotate_pair(none, none, 1, 0, 0, 1);
}

// Every length 0..67 covers the vector body and the odd tail.
TEST(KernelEquivalence, CaxpyAvx2MatchesScalar) {
  const auto* simd = simd_or_skip();
  if (simd == nullptr) GTEST_SKIP() << "AVX2 variant unavailable";
  PrngStream rng(11, 0);
  for (std::size_t n = 0; n < 68; ++n) {
    const auto x = random_vector(rng, n);
    const auto y0 = random_vector(rng, n);
    const Complex a = rng.complex_gaussian();
    auto y_ref = y0;
    auto y_simd = y0;
    kernels::scalar().caxpy(a, x, y_ref);
    simd->caxpy(a, x, y_simd);
    EXPECT_LT(max_diff(y_ref, y_simd), 1e-14) << "n = " << n;
  }
}

TEST(KernelEquivalence, RotatePairAvx2MatchesScalar) {
  const auto* simd = simd_or_skip();
  if (simd == nullptr) GTEST_SKIP() << "AVX2 variant unavailable";
  PrngStream rng(12, 0);
  for (std::size_t n = 0; n < 68; ++n) {
    const auto x0 = random_vector(rng, n);
    const auto y0 = random_vector(rng, n);
    const Complex al = rng.complex_gaussian(), be = rng.complex_gaussian();
    const Complex ga = rng.complex_gaussian(), de = rng.complex_gaussian();
    auto xr = x0, yr = y0, xs = x0, ys = y0;
    kernels::scalar().rotate_pair(xr, yr, al, be, ga, de);
    simd->rotate_pair(xs, ys, al, be, ga, de);
    EXPECT_LT(max_diff(xr, xs), 1e-14) << "n = " << n;
    EXPECT_LT(max_diff(yr, ys), 1e-14) << "n = " << n;
  }
}

TEST(KernelEquivalence, SumAbs2Avx2MatchesScalar) {
  const auto* simd = simd_or_skip();
  if (simd == nullptr) GTEST_SKIP() << "AVX2 variant unavailable";
  PrngStream rng(13, 0);
  for (std::size_t n = 0; n < 68; ++n) {
    const auto x = random_vector(rng, n);
    const double ref = kernels::scalar().sum_abs2(x);
    EXPECT_NEAR(simd->sum_abs2(x), ref, 1e-13 * std::max(1.0, ref)) << "n = " << n;
  }
}

TEST(KernelEquivalence, SimdRotationPreservesNormForUnitaryCoefficients) {
  const auto* simd = simd_or_skip();
  if (simd == nullptr) GTEST_SKIP() << "AVX2 variant unavailable";
  PrngStream rng(14, 0);
  auto x = random_vector(rng, 33);
  auto y = random_vector(rng, 33);
  const double before = simd->sum_abs2(x) + simd->sum_abs2(y);
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Complex phase = std::polar(1.0, 1.3);
  simd->rotate_pair(x, y, c, -s * phase, s, c * phase);
  EXPECT_NEAR(simd->sum_abs2(x) + simd->sum_abs2(y), before, 1e-12 * before);
}
