#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace svineq {

using Complex = std::complex<double>;

// Largest dimension accepted from outside the library (files, generators).
// Block and direct-sum constructions internally reach twice this.
inline constexpr std::size_t kMaxInputDim = 64;
inline constexpr std::size_t kMaxInternalDim = 2 * kMaxInputDim;

/// Dense square complex matrix, row-major.
///
/// Entries are finite: every constructor that takes external data rejects
/// NaN/Inf with ErrorKind::MalformedInput.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<Complex> row(std::size_t i) { return {data_.data() + i * n_, n_}; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex factor);

bool all_finite(const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
// [[a, b], [c, d]] with four equal-sized blocks.
ComplexMatrix block2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d);
// k x k block whose top-left entry is m(row0, col0).
ComplexMatrix sub_block(const ComplexMatrix& m, std::size_t row0, std::size_t col0, std::size_t k);

double frobenius_norm(const ComplexMatrix& m);
// (m + m*) / 2, exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& m);
// ||m - m*||_F
double hermitian_defect(const ComplexMatrix& m);
double trace_real(const ComplexMatrix& m);

}  // namespace svineq
