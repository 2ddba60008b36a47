#pragma once

#include "svineq/matrix.hpp"
#include "svineq/spectral.hpp"

namespace svineq {

// A = a1 + i a2 with a1 = (A + A*)/2, a2 = (A - A*)/(2i); both exactly Hermitian.
struct CartesianPair {
  ComplexMatrix a1;
  ComplexMatrix a2;
};

// Self-adjoint A = plus - minus with plus, minus PSD and plus * minus = 0.
struct JordanPair {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

/// Hypothesis flags with the residuals they were decided from.
struct ClassFlags {
  bool hermitian = false;
  bool psd = false;
  bool normal = false;
  bool hyponormal = false;
  double hermitian_defect = 0.0;   // ||A - A*||_F
  double normality_defect = 0.0;   // ||A*A - AA*||_F
  double hyponormal_defect = 0.0;  // min eigenvalue of A*A - AA*
  double min_eigenvalue = 0.0;     // of the Hermitian part; PSD test
  double tol_effective = 0.0;      // threshold the flags were decided with
};

CartesianPair cartesian(const ComplexMatrix& a);
ComplexMatrix recombine(const CartesianPair& parts);

// Spectral split of a Hermitian matrix: plus = V max(L, 0) V*, minus = V max(-L, 0) V*.
JordanPair jordan(const ComplexMatrix& a);

// ||A*A - AA*||_F; equals 2 ||a1 a2 - a2 a1||_F.
double normality_defect(const ComplexMatrix& a);

// Tolerances scale with max(1, ||A||_F^2) for the quadratic residuals and
// max(1, ||A||_F) for the Hermitian/PSD tests.
ClassFlags classify(const ComplexMatrix& a, const Tolerance& tol = {});

// Smallest eigenvalue of a Hermitian matrix (0 for the empty matrix).
double min_eigenvalue(const ComplexMatrix& h);

}  // namespace svineq
