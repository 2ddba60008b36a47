#include "svineq/matrix.hpp"

#include <cmath>
#include <string>

#include "svineq/error.hpp"
#include "svineq/kernels.hpp"

namespace svineq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::MalformedWitness: return "MalformedWitness";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + std::to_string(a.dim()) +
                                                  " vs " + std::to_string(b.dim()));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n_ * n_) {
    throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                               std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!finite(z)) throw Error(ErrorKind::MalformedInput, "non-finite matrix entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorKind::MalformedInput, "ragged or non-square rows");
    for (const Complex& z : r) {
      if (!finite(z)) throw Error(ErrorKind::MalformedInput, "non-finite matrix entry");
      data_.push_back(z);
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  if (factor.imag() == 0.0) {
    for (Complex& z : data_) z = {z.real() * factor.real(), z.imag() * factor.real()};
  } else {
    for (Complex& z : data_) {
      z = {z.real() * factor.real() - z.imag() * factor.imag(),
           z.real() * factor.imag() + z.imag() * factor.real()};
    }
  }
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }
ComplexMatrix operator*(ComplexMatrix a, Complex factor) { return a *= factor; }

bool all_finite(const ComplexMatrix& m) {
  for (const Complex& z : m.data()) {
    if (!finite(z)) return false;
  }
  return true;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  const auto& k = kernels::active();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex ail = a(i, l);
      if (ail == Complex{}) continue;
      k.caxpy(ail, b.row(l), c.row(i));
    }
  }
  return c;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na + nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) out(na + i, na + j) = b(i, j);
  }
  return out;
}

ComplexMatrix block2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d) {
  require_same_dim(a, b, "block2");
  require_same_dim(a, c, "block2");
  require_same_dim(a, d, "block2");
  const std::size_t n = a.dim();
  ComplexMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, n + j) = b(i, j);
      out(n + i, j) = c(i, j);
      out(n + i, n + j) = d(i, j);
    }
  }
  return out;
}

ComplexMatrix sub_block(const ComplexMatrix& m, std::size_t row0, std::size_t col0, std::size_t k) {
  if (row0 + k > m.dim() || col0 + k > m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "sub_block out of range");
  }
  ComplexMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(row0 + i, col0 + j);
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) { return std::sqrt(kernels::active().sum_abs2(m.data())); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

double hermitian_defect(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc += std::norm(m(i, j) - std::conj(m(j, i)));
  }
  return std::sqrt(acc);
}

double trace_real(const ComplexMatrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i).real();
  return t;
}

}  // namespace svineq
