#pragma once

// Inner loops of the dense complex arithmetic. Every routine has a portable
// scalar reference; wider variants are picked once at startup from the CPU
// features and must agree with the reference to rounding.

#include <span>
#include <string_view>

#include "svineq/matrix.hpp"

namespace svineq::kernels {

struct KernelTable {
  std::string_view name;
  // y += a * x
  void (*caxpy)(Complex a, std::span<const Complex> x, std::span<Complex> y);
  // (x, y) <- (alpha*x + beta*y, gamma*x + delta*y), elementwise.
  void (*rotate_pair)(std::span<Complex> x, std::span<Complex> y, Complex alpha, Complex beta,
                      Complex gamma, Complex delta);
  // sum |x_i|^2
  double (*sum_abs2)(std::span<const Complex> x);
};

const KernelTable& scalar();

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2();

// The table used by the library: the widest variant the CPU supports.
const KernelTable& active();

}  // namespace svineq::kernels
