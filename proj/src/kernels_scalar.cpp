#include "svineq/kernels.hpp"

namespace svineq::kernels {
namespace {

// Explicit real arithmetic; std::complex operator* goes through the
// Annex G NaN-recovery path, which we never need on finite data.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void caxpy_scalar(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += mul(a, x[i]);
}

void rotate_pair_scalar(std::span<Complex> x, std::span<Complex> y, Complex alpha, Complex beta,
                        Complex gamma, Complex delta) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = mul(alpha, xi) + mul(beta, yi);
    y[i] = mul(gamma, xi) + mul(delta, yi);
  }
}

double sum_abs2_scalar(std::span<const Complex> x) {
  double acc = 0.0;
  for (const Complex& v : x) acc += v.real() * v.real() + v.imag() * v.imag();
  return acc;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", caxpy_scalar, rotate_pair_scalar, sum_abs2_scalar};
  return table;
}

}  // namespace svineq::kernels
