#include "svineq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "svineq/error.hpp"
#include "svineq/kernels.hpp"

namespace svineq {

namespace {

constexpr double kHermitianRelTol = 1e-12;
constexpr double kConvergenceRel = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double acc = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) acc += std::norm(a(p, q));
  }
  return std::sqrt(2.0 * acc);
}

// Annihilates a(p, q) with the unitary J = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on coordinates p, q: a <- J* a J and vt <- (V J)^T.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& vt, std::size_t p, std::size_t q,
                   const kernels::KernelTable& k) {
  const Complex b = a(p, q);
  const double mag = std::abs(b);
  if (mag == 0.0) return;
  const Complex phase = b / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Rows p, q of the Hermitian iterate; columns follow by conjugate symmetry.
  k.rotate_pair(a.row(p), a.row(q), c, -s * phase, s, c * phase);
  const std::size_t n = a.dim();
  for (std::size_t m = 0; m < n; ++m) {
    if (m == p || m == q) continue;
    a(m, p) = std::conj(a(p, m));
    a(m, q) = std::conj(a(q, m));
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  // Rows of vt are eigenvector columns.
  const Complex conj_phase = std::conj(phase);
  k.rotate_pair(vt.row(p), vt.row(q), c, -s * conj_phase, s, c * conj_phase);
}

}  // namespace

double Tolerance::effective(double scale) const { return abs + rel * std::max(1.0, scale); }

bool Tolerance::valid() const { return abs >= 0.0 && rel >= 0.0 && std::isfinite(abs) && std::isfinite(rel); }

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) v = std::max(v, 0.0);
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<double> SingularSpectrum::padded(std::size_t length) const {
  std::vector<double> out(std::max(length, values_.size()), 0.0);
  std::copy(values_.begin(), values_.end(), out.begin());
  return out;
}

SingularSpectrum SingularSpectrum::scaled(double factor) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= factor;
  return SingularSpectrum(std::move(v));
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double norm = frobenius_norm(m);
  const double scale = std::max(1.0, norm);
  const double defect = hermitian_defect(m);
  if (defect > kHermitianRelTol * scale) {
    throw Error(ErrorKind::NotHermitian, "||M - M*||_F = " + std::to_string(defect));
  }

  SpectralDecomposition out;
  if (norm == 0.0) {
    out.eigenvalues.assign(n, 0.0);
    out.vectors = ComplexMatrix::identity(n);
    return out;
  }

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix vt = ComplexMatrix::identity(n);
  const auto& k = kernels::active();
  const double threshold = kConvergenceRel * scale;

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, vt, p, q, k);
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "off-diagonal norm " + std::to_string(off_diagonal_norm(a)) + " after " +
                    std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = vt(src, row);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m).eigenvalues; }

ComplexMatrix spectral_function(const SpectralDecomposition& eig, const std::vector<double>& values) {
  const std::size_t n = eig.vectors.dim();
  const ComplexMatrix& v = eig.vectors;
  // W = V diag(values); result = W V*
  ComplexMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = v(i, j) * values[j];
  }
  return hermitian_part(matmul(w, adjoint(v)));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  return psd_sqrt(m, Tolerance{}.effective(frobenius_norm(m)));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
  const SpectralDecomposition eig = hermitian_eig(m);
  std::vector<double> roots(eig.eigenvalues.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -tol) {
      throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lambda) + " below -" + std::to_string(tol));
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  return spectral_function(eig, roots);
}

ComplexMatrix abs_op(const ComplexMatrix& m) { return psd_sqrt(hermitian_part(matmul(adjoint(m), m))); }

SingularSpectrum singular_values(const ComplexMatrix& m) {
  std::vector<double> values = hermitian_eigenvalues(hermitian_part(matmul(adjoint(m), m)));
  for (double& v : values) v = std::sqrt(std::max(v, 0.0));
  return SingularSpectrum(std::move(values));
}

LoewnerVerdict loewner_leq(const ComplexMatrix& x, const ComplexMatrix& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "loewner_leq: " + std::to_string(x.dim()) + " vs " +
                                                  std::to_string(y.dim()));
  }
  for (const ComplexMatrix* m : {&x, &y}) {
    const double defect = hermitian_defect(*m);
    if (defect > kHermitianRelTol * std::max(1.0, frobenius_norm(*m))) {
      throw Error(ErrorKind::NotHermitian, "loewner_leq operand, ||M - M*||_F = " + std::to_string(defect));
    }
  }
  const ComplexMatrix diff = hermitian_part(y - x);
  LoewnerVerdict v;
  v.scale = frobenius_norm(diff);
  v.tol_effective = tol.effective(v.scale);
  v.eigenvalues = hermitian_eigenvalues(diff);
  v.min_eigenvalue = v.eigenvalues.empty() ? 0.0 : v.eigenvalues.front();
  v.holds = v.min_eigenvalue >= -v.tol_effective;
  return v;
}

}  // namespace svineq
