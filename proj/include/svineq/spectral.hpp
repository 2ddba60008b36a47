#pragma once

#include <cstddef>
#include <vector>

#include "svineq/matrix.hpp"

namespace svineq {

/// Absolute/relative tolerance pair used by every order and positivity test.
///
/// The effective threshold at a given scale is
/// `abs + rel * max(1, scale)`, where the scale is a norm of the quantity
/// being compared (for Loewner order, ||Y - X||_F).
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  double effective(double scale) const;
  bool valid() const;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // column k pairs with eigenvalues[k]
};

/// Nonincreasing list of nonnegative singular values. Reads past the end
/// return zero, so spectra of different lengths compare index by index.
class SingularSpectrum {
 public:
  SingularSpectrum() = default;
  // Sorts descending and clamps tiny negatives to zero.
  explicit SingularSpectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return j < values_.size() ? values_[j] : 0.0; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double> padded(std::size_t length) const;
  double largest() const noexcept { return (*this)[0]; }

  SingularSpectrum scaled(double factor) const;

 private:
  std::vector<double> values_;
};

/// Cyclic complex Jacobi eigensolver for Hermitian input.
///
/// The input must be Hermitian to 1e-12 relative; it is symmetrized before
/// iterating. Iteration stops once the off-diagonal Frobenius norm is at most
/// 1e-14 * max(1, ||M||_F); after 100 sweeps NoConvergence is thrown.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// V * diag(values) * V*, exactly Hermitian.
ComplexMatrix spectral_function(const SpectralDecomposition& eig, const std::vector<double>& values);

/// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero; anything below -tol raises NotPSD. The default tolerance
/// is Tolerance{}.effective(||M||_F).
ComplexMatrix psd_sqrt(const ComplexMatrix& m);
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol);

// |M| = (M* M)^{1/2}
ComplexMatrix abs_op(const ComplexMatrix& m);

SingularSpectrum singular_values(const ComplexMatrix& m);

struct LoewnerVerdict {
  bool holds = false;
  double min_eigenvalue = 0.0;
  double tol_effective = 0.0;
  double scale = 0.0;               // ||Y - X||_F
  std::vector<double> eigenvalues;  // of Y - X, ascending
};

// X <= Y iff the smallest eigenvalue of Y - X is >= -tol.effective(||Y - X||_F).
LoewnerVerdict loewner_leq(const ComplexMatrix& x, const ComplexMatrix& y, const Tolerance& tol = {});

}  // namespace svineq
