#include "svineq/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "svineq/error.hpp"

namespace svineq {

CartesianPair cartesian(const ComplexMatrix& a) {
  const ComplexMatrix a_star = adjoint(a);
  // (A - A*) / (2i) == (A - A*) * (-i/2), which only permutes and halves components.
  return {hermitian_part(0.5 * (a + a_star)), hermitian_part((a - a_star) * Complex(0.0, -0.5))};
}

ComplexMatrix recombine(const CartesianPair& parts) { return parts.a1 + parts.a2 * Complex(0.0, 1.0); }

JordanPair jordan(const ComplexMatrix& a) {
  const SpectralDecomposition eig = hermitian_eig(a);
  std::vector<double> pos(eig.eigenvalues.size());
  std::vector<double> neg(eig.eigenvalues.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    pos[k] = std::max(eig.eigenvalues[k], 0.0);
    neg[k] = std::max(-eig.eigenvalues[k], 0.0);
  }
  return {spectral_function(eig, pos), spectral_function(eig, neg)};
}

double normality_defect(const ComplexMatrix& a) {
  const ComplexMatrix a_star = adjoint(a);
  return frobenius_norm(matmul(a_star, a) - matmul(a, a_star));
}

double min_eigenvalue(const ComplexMatrix& h) {
  const auto values = hermitian_eigenvalues(h);
  return values.empty() ? 0.0 : values.front();
}

ClassFlags classify(const ComplexMatrix& a, const Tolerance& tol) {
  ClassFlags f;
  const double norm = frobenius_norm(a);
  const double linear_tol = tol.effective(norm);
  const double quadratic_tol = tol.effective(norm * norm);
  f.tol_effective = quadratic_tol;

  f.hermitian_defect = hermitian_defect(a);
  f.hermitian = f.hermitian_defect <= linear_tol;
  f.min_eigenvalue = min_eigenvalue(hermitian_part(a));
  f.psd = f.hermitian && f.min_eigenvalue >= -linear_tol;

  const ComplexMatrix a_star = adjoint(a);
  const ComplexMatrix self_commutator = hermitian_part(matmul(a_star, a) - matmul(a, a_star));
  f.normality_defect = frobenius_norm(self_commutator);
  f.normal = f.normality_defect <= quadratic_tol;
  f.hyponormal_defect = min_eigenvalue(self_commutator);
  f.hyponormal = f.hyponormal_defect >= -quadratic_tol;
  // |min eigenvalue| <= ||D||_F, so this only patches rounding in the eigensolve.
  if (f.normal) f.hyponormal = true;
  return f;
}

}  // namespace svineq
