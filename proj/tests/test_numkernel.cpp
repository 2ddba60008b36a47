#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "svineq/error.hpp"
#include "svineq/randgen.hpp"
#include "svineq/spectral.hpp"

using namespace svineq;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix diag(std::initializer_list<double> d) { return ComplexMatrix::diagonal(std::vector<double>(d)); }

ComplexMatrix random_hermitian(std::uint64_t seed, std::size_t n) {
  return generate({GeneratorClass::Hermitian, n, seed, 1.0}).matrices.front();
}

ComplexMatrix reconstruct(const SpectralDecomposition& e) {
  const std::size_t n = e.vectors.dim();
  ComplexMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = e.vectors(i, j) * e.eigenvalues[j];
  }
  return oracle::naive_matmul(w, adjoint(e.vectors));
}

void expect_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
  EXPECT_EQ(adjoint(ComplexMatrix{{0, 1}, {0, 0}}), (ComplexMatrix{{0, 0}, {1, 0}}));
  const ComplexMatrix a{{{2, -1}, {0, 2}}, {{0, 2}, {0, 2}}};
  EXPECT_EQ(adjoint(a), (ComplexMatrix{{{2, 1}, {0, -2}}, {{0, -2}, {0, -2}}}));
}

TEST(Matmul, Examples) {
  PrngStream rng(3, 0);
  const ComplexMatrix m = ginibre(rng, 4);
  EXPECT_EQ(matmul(ComplexMatrix::identity(4), m), m);
  EXPECT_EQ(matmul(diag({2, 3}), diag({5, 7})), diag({10, 21}));
  EXPECT_EQ(matmul(ComplexMatrix{{0, 1}, {0, 0}}, ComplexMatrix{{0, 0}, {1, 0}}), diag({1, 0}));
}

TEST(Matmul, AgreesWithNaiveProduct) {
  PrngStream rng(4, 0);
  for (std::size_t n : {1, 2, 3, 7, 16, 33}) {
    const ComplexMatrix a = ginibre(rng, n);
    const ComplexMatrix b = ginibre(rng, n);
    EXPECT_LT(oracle::max_abs_diff(matmul(a, b), oracle::naive_matmul(a, b)), 1e-12 * n) << n;
  }
}

TEST(Matmul, DimensionMismatch) {
  expect_kind(ErrorKind::DimensionMismatch, [] { matmul(ComplexMatrix(2), ComplexMatrix(3)); });
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(diag({1}), diag({2})), diag({1, 2}));
  EXPECT_EQ(direct_sum(ComplexMatrix(1), ComplexMatrix(1)), ComplexMatrix(2));
  const auto s = singular_values(direct_sum(diag({3}), diag({4, 1})));
  EXPECT_LT(oracle::max_abs_diff(s.values(), {4, 3, 1}), 1e-12);
}

TEST(Block2, Examples) {
  const auto id = ComplexMatrix::identity(2);
  const auto zero = ComplexMatrix(2);
  EXPECT_EQ(block2(id, zero, zero, id), ComplexMatrix::identity(4));
  // Oracle: LAPACK on the assembled 4x4.
  const ComplexMatrix ones = block2(id, id, id, id);
  EXPECT_LT(oracle::max_abs_diff(oracle::hermitian_eigenvalues(ones), {0, 0, 2, 2}), 1e-14);
  EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(ones), {0, 0, 2, 2}), 1e-12);
  expect_kind(ErrorKind::DimensionMismatch, [&] { block2(id, id, id, ComplexMatrix(3)); });
}

TEST(HermitianEig, Examples) {
  EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(ComplexMatrix{{0, 1}, {1, 0}}), {-1, 1}), 1e-14);
  const ComplexMatrix a2{{-1, 2}, {2, 2}};
  const auto closed = oracle::eig2x2(-1, 2, 2);  // trace 1, det -6
  EXPECT_LT(oracle::max_abs_diff(closed, {-2, 3}), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(a2), closed), 1e-14);
  const auto five = hermitian_eig(diag({5}));
  EXPECT_EQ(five.eigenvalues, std::vector<double>{5});
  EXPECT_EQ(five.vectors, ComplexMatrix::identity(1));
}

TEST(HermitianEig, ZeroMatrixSkipsIteration) {
  const auto e = hermitian_eig(ComplexMatrix(5));
  EXPECT_EQ(e.eigenvalues, std::vector<double>(5, 0.0));
  EXPECT_EQ(e.vectors, ComplexMatrix::identity(5));
}

TEST(HermitianEig, RejectsNonHermitian) {
  expect_kind(ErrorKind::NotHermitian, [] { hermitian_eig(ComplexMatrix{{0, 1}, {0, 0}}); });
  // Below the 1e-12 relative threshold the input is accepted and symmetrized.
  ComplexMatrix nearly{{1, 2}, {2, 1}};
  nearly(0, 1) += 1e-14;
  EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(nearly), {-1, 3}), 1e-13);
}

TEST(HermitianEig, ComplexOffDiagonal) {
  const ComplexMatrix h{{{2, 0}, {1, -1}}, {{1, 1}, {-3, 0}}};
  EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(h), oracle::eig2x2(2, {1, -1}, -3)), 1e-14);
}

TEST(HermitianEig, RepeatedEigenvalues) {
  PrngStream rng(8, 0);
  const ComplexMatrix u = random_unitary(rng, 6);
  const ComplexMatrix h = hermitian_part(matmul(matmul(u, diag({1, 1, 1, -2, -2, 5})), adjoint(u)));
  const auto e = hermitian_eig(h);
  EXPECT_LT(oracle::max_abs_diff(e.eigenvalues, {-2, -2, 1, 1, 1, 5}), 1e-12);
  EXPECT_LT(frobenius_norm(reconstruct(e) - h), 1e-12);
}

TEST(HermitianEig, ReconstructionAndUnitarityProperty) {
  for (std::size_t n : {1, 2, 3, 5, 8, 13, 21, 32}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const ComplexMatrix m = random_hermitian(1000 * n + seed, n);
      const auto e = hermitian_eig(m);
      const double scale = std::max(1.0, frobenius_norm(m));
      EXPECT_LE(frobenius_norm(reconstruct(e) - m), 1e-10 * scale) << n << "/" << seed;
      const ComplexMatrix gram = oracle::naive_matmul(adjoint(e.vectors), e.vectors);
      EXPECT_LE(frobenius_norm(gram - ComplexMatrix::identity(n)), 1e-10 * std::sqrt(double(n)));
      EXPECT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
      EXPECT_LT(oracle::max_abs_diff(e.eigenvalues, oracle::hermitian_eigenvalues(m)), 1e-11 * scale);
    }
  }
}

TEST(HermitianEig, HandlesLargestInternalDimension) {
  const ComplexMatrix m = direct_sum(random_hermitian(77, kMaxInputDim), random_hermitian(78, kMaxInputDim));
  const auto e = hermitian_eig(m);
  EXPECT_LE(frobenius_norm(reconstruct(e) - m), 1e-10 * frobenius_norm(m));
}

TEST(PsdSqrt, Examples) {
  EXPECT_LT(oracle::max_abs_diff(psd_sqrt(diag({4, 9})), diag({2, 3})), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 1e-15);
  // Oracle: 3 P1 + 2 P2 with P1 = v1 v1^T, v1 = (1, 2)/sqrt5, v2 = (2, -1)/sqrt5.
  const ComplexMatrix a2{{-1, 2}, {2, 2}};
  const ComplexMatrix expected{{2.2, 0.4}, {0.4, 2.8}};
  EXPECT_LT(oracle::max_abs_diff(psd_sqrt(matmul(a2, a2)), expected), 1e-14);
}

TEST(PsdSqrt, SquareReproducesInput) {
  PrngStream rng(21, 0);
  for (std::size_t n : {2, 4, 9}) {
    const ComplexMatrix g = ginibre(rng, n);
    const ComplexMatrix p = hermitian_part(matmul(adjoint(g), g));
    const ComplexMatrix r = psd_sqrt(p);
    EXPECT_LT(hermitian_defect(r), 1e-15);
    EXPECT_GE(hermitian_eigenvalues(r).front(), -1e-12);
    EXPECT_LE(frobenius_norm(matmul(r, r) - p), 1e-9 * std::max(1.0, frobenius_norm(p)));
  }
}

TEST(PsdSqrt, ClampsTinyNegativesAndRejectsRealOnes) {
  EXPECT_EQ(psd_sqrt(diag({4, -1e-13}))(1, 1), Complex(0.0));
  expect_kind(ErrorKind::NotPSD, [] { psd_sqrt(diag({4, -1e-3})); });
}

TEST(AbsOp, Examples) {
  EXPECT_LT(oracle::max_abs_diff(abs_op(diag({3, -4})), diag({3, 4})), 1e-14);
  EXPECT_LT(oracle::max_abs_diff(abs_op(ComplexMatrix{{0, 2}, {0, 0}}), diag({0, 2})), 1e-14);
  EXPECT_LT(oracle::max_abs_diff(abs_op(ComplexMatrix{{-1, 2}, {2, 2}}), ComplexMatrix{{2.2, 0.4}, {0.4, 2.8}}),
            1e-14);
}

TEST(AbsOp, HermitianModulusProperty) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix h = random_hermitian(seed, 2 + seed % 7);
    auto expected = hermitian_eigenvalues(h);
    for (double& v : expected) v = std::abs(v);
    std::sort(expected.begin(), expected.end());
    EXPECT_LT(oracle::max_abs_diff(hermitian_eigenvalues(abs_op(h)), expected), 1e-10) << seed;
  }
}

TEST(SingularValues, Examples) {
  EXPECT_LT(oracle::max_abs_diff(singular_values(diag({3, -4})).values(), {4, 3}), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(singular_values(ComplexMatrix{{0, 2}, {0, 0}}).values(), {2, 0}), 1e-15);
  const ComplexMatrix a{{{1, 1}, {1, 0}}, {{1, 0}, {0, 1}}};
  const auto s = singular_values(a);
  EXPECT_NEAR(s[1], 1.1756, 1e-4);  // stated to four decimals
  // A = A1 + iI is normal with eig(A1) = {phi, -1/phi}.
  EXPECT_NEAR(s[0], std::hypot(std::numbers::phi, 1.0), 1e-12);
  EXPECT_NEAR(s[1], std::hypot(1.0 / std::numbers::phi, 1.0), 1e-12);
}

TEST(SingularValues, AgreesWithLapackSvd) {
  PrngStream rng(31, 0);
  for (std::size_t n : {1, 2, 3, 6, 10, 20}) {
    const ComplexMatrix m = ginibre(rng, n);
    const auto s = singular_values(m);
    const auto ref = oracle::singular_values(m);
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(s[j], ref[j], 1e-9 * std::max(1.0, ref[0])) << n << "/" << j;
  }
}

TEST(SingularValues, ZeroPaddingReads) {
  const auto s = singular_values(diag({1, 2}));
  EXPECT_EQ(s[5], 0.0);
  EXPECT_EQ(s.padded(4), (std::vector<double>{2, 1, 0, 0}));
}

TEST(SingularValues, UnitaryInvarianceProperty) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PrngStream rng(seed, 7);
    const std::size_t n = 2 + seed % 6;
    const ComplexMatrix m = ginibre(rng, n);
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix w = random_unitary(rng, n);
    const auto s = singular_values(m);
    const auto t = singular_values(matmul(matmul(u, m), w));
    const auto adj = singular_values(adjoint(m));
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(t[j], s[j], 1e-9 * std::max(1.0, s[0]));
      EXPECT_NEAR(adj[j], s[j], 1e-9 * std::max(1.0, s[0]));
    }
  }
}

TEST(SingularValues, DirectSumMergesSpectraProperty) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PrngStream rng(seed, 9);
    const ComplexMatrix a = ginibre(rng, 2 + seed % 3);
    const ComplexMatrix b = ginibre(rng, 1 + seed % 4);
    std::vector<double> merged = singular_values(a).values();
    const auto sb = singular_values(b).values();
    merged.insert(merged.end(), sb.begin(), sb.end());
    std::sort(merged.begin(), merged.end(), std::greater<>());
    EXPECT_LT(oracle::max_abs_diff(singular_values(direct_sum(a, b)).values(), merged), 1e-12);
  }
}

TEST(Weyl, MonotonicityUnderPsdShiftProperty) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const ComplexMatrix x = random_hermitian(seed, n);
    const ComplexMatrix p = generate({GeneratorClass::Psd, n, seed + 500, 1.0}).matrices.front();
    const auto lo = hermitian_eigenvalues(x);
    const auto hi = hermitian_eigenvalues(x + p);
    for (std::size_t j = 0; j < n; ++j) EXPECT_LE(lo[j], hi[j] + 1e-9) << seed << "/" << j;
  }
}

TEST(Loewner, Examples) {
  const auto id = ComplexMatrix::identity(3);
  const auto v = loewner_leq(id, 2.0 * id);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.min_eigenvalue, 1.0, 1e-15);
  const ComplexMatrix x = random_hermitian(5, 4);
  const auto same = loewner_leq(x, x);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.min_eigenvalue, 0.0);

  // |A1 + iA2| <= |A1| + |A2| fails for [[2 - i, 2i], [2i, 2i]].
  const ComplexMatrix a1{{2, 0}, {0, 0}};
  const ComplexMatrix a2{{-1, 2}, {2, 2}};
  const auto fails = loewner_leq(abs_op(a1 + a2 * I1), abs_op(a1) + abs_op(a2));
  EXPECT_FALSE(fails.holds);
  EXPECT_LT(fails.min_eigenvalue, -0.2);
}

TEST(Loewner, ToleranceIsScaleAware) {
  const auto id = ComplexMatrix::identity(2);
  ComplexMatrix y = id;
  y(1, 1) = 1.0 - 5e-10;
  EXPECT_TRUE(loewner_leq(id, y).holds);                 // within 1e-12 + 1e-9
  EXPECT_FALSE(loewner_leq(id, y, {0.0, 1e-12}).holds);  // tightened
  expect_kind(ErrorKind::NotHermitian, [&] { loewner_leq(ComplexMatrix{{0, 1}, {0, 0}}, id); });
  expect_kind(ErrorKind::DimensionMismatch, [&] { loewner_leq(id, ComplexMatrix::identity(3)); });
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_norm(ComplexMatrix(3)), 0.0);
  EXPECT_NEAR(frobenius_norm(ComplexMatrix::identity(7)), std::sqrt(7.0), 1e-15);
  EXPECT_EQ(frobenius_norm(ComplexMatrix{{3, 4}, {0, 0}}), 5.0);
}

TEST(ComplexMatrix, RejectsNonFiniteAndRaggedInput) {
  expect_kind(ErrorKind::MalformedInput, [] { ComplexMatrix(2, {1, 2, 3}); });
  expect_kind(ErrorKind::MalformedInput, [] { ComplexMatrix(1, {Complex(NAN, 0)}); });
  expect_kind(ErrorKind::MalformedInput, [] { ComplexMatrix{{1, 2}, {3}}; });
}
