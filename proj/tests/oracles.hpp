#pragma once

// Independent reference computations for the tests. Nothing here goes
// through the library's eigensolver or kernels.

#include <vector>

#include "svineq/matrix.hpp"

namespace svineq::oracle {

// LAPACK zgesvd, descending.
std::vector<double> singular_values(const ComplexMatrix& m);
// LAPACK zheev on the upper triangle, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Closed form for [[a, b], [conj(b), d]], ascending.
std::vector<double> eig2x2(double a, Complex b, double d);

// Naive triple loop, std::complex arithmetic.
ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace svineq::oracle
