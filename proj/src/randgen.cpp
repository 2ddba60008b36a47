#include "svineq/randgen.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "svineq/error.hpp"
#include "svineq/spectral.hpp"

namespace svineq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct ClassInfo {
  GeneratorClass tag;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<ClassInfo, 9> kClasses{{
    {GeneratorClass::Ginibre, "ginibre", 1},
    {GeneratorClass::Hermitian, "hermitian", 1},
    {GeneratorClass::Psd, "psd", 1},
    {GeneratorClass::Unitary, "unitary", 1},
    {GeneratorClass::Normal, "normal", 1},
    {GeneratorClass::PsdBlock2, "psd_block2", 3},
    {GeneratorClass::DominatedPair, "dominated_pair", 2},
    {GeneratorClass::NormalOrderConstrained, "normal_order_constrained", 1},
    {GeneratorClass::NormalPairSharedBasis, "normal_pair_shared_basis", 2},
}};

ComplexMatrix psd_from(PrngStream& rng, std::size_t n) {
  const ComplexMatrix g = ginibre(rng, n);
  return hermitian_part(matmul(adjoint(g), g));
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, std::span<const Complex> diag) {
  return matmul(matmul(u, ComplexMatrix::diagonal(diag)), adjoint(u));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

PrngStream::PrngStream(std::uint64_t seed, std::uint64_t stream_index)
    : key_(mix64(mix64(seed + kGolden) ^ (stream_index * kGolden + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t PrngStream::next_u64() { return mix64(key_ + kGolden * ++counter_); }

double PrngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double PrngStream::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex PrngStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::string_view to_string(GeneratorClass c) {
  for (const auto& entry : kClasses) {
    if (entry.tag == c) return entry.name;
  }
  return "unknown";
}

std::optional<GeneratorClass> parse_generator_class(std::string_view name) {
  for (const auto& entry : kClasses) {
    if (entry.name == name) return entry.tag;
  }
  return std::nullopt;
}

const std::vector<GeneratorClass>& all_generator_classes() {
  static const std::vector<GeneratorClass> tags = [] {
    std::vector<GeneratorClass> out;
    for (const auto& entry : kClasses) out.push_back(entry.tag);
    return out;
  }();
  return tags;
}

std::size_t class_arity(GeneratorClass c) {
  for (const auto& entry : kClasses) {
    if (entry.tag == c) return entry.arity;
  }
  return 0;
}

ComplexMatrix ginibre(PrngStream& rng, std::size_t n) {
  ComplexMatrix g(n);
  for (Complex& z : g.data()) z = rng.complex_gaussian();
  return g;
}

ComplexMatrix random_unitary(PrngStream& rng, std::size_t n) {
  ComplexMatrix r = ginibre(rng, n);
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n);
  std::vector<Complex> diag_phase(n, 1.0);

  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) norm2 += std::norm(r(i, k));
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const Complex x0 = r(k, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * norm;

    // v = x - alpha e_k, normalized; H = I - 2 v v*.
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r(i, k) - (i == k ? alpha : Complex{});
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k; i < n; ++i) v[i] *= inv;

    // R <- H R
    for (std::size_t j = k; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, j);
      for (std::size_t i = k; i < n; ++i) r(i, j) -= 2.0 * v[i] * dot;
    }
    // Q <- Q H
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{};
      for (std::size_t l = k; l < n; ++l) dot += q(i, l) * v[l];
      for (std::size_t l = k; l < n; ++l) q(i, l) -= 2.0 * dot * std::conj(v[l]);
    }
    diag_phase[k] = -phase;  // r(k, k) == alpha
  }
  // Q diag(phase) pairs with diag(conj phase) R, whose diagonal is positive.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) *= diag_phase[j];
  }
  return q;
}

GeneratedInput generate(const GeneratorSpec& spec) {
  if (spec.dim < 1 || spec.dim > kMaxInputDim) {
    throw Error(ErrorKind::InvalidSpec, "dim " + std::to_string(spec.dim) + " outside [1, 64]");
  }
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw Error(ErrorKind::InvalidSpec, "scale must be positive and finite");
  }
  const std::size_t n = spec.dim;
  PrngStream rng(spec.seed, 0);
  GeneratedInput out;
  out.provenance = spec;
  auto& ms = out.matrices;

  switch (spec.class_tag) {
    case GeneratorClass::Ginibre:
      ms.push_back(ginibre(rng, n));
      break;
    case GeneratorClass::Hermitian:
      ms.push_back(hermitian_part(ginibre(rng, n)));
      break;
    case GeneratorClass::Psd:
      ms.push_back(psd_from(rng, n));
      break;
    case GeneratorClass::Unitary:
      ms.push_back(random_unitary(rng, n));
      return out;
    case GeneratorClass::Normal: {
      const ComplexMatrix u = random_unitary(rng, n);
      std::vector<Complex> d(n);
      for (Complex& z : d) z = rng.complex_gaussian();
      ms.push_back(conjugate_by(u, d));
      break;
    }
    case GeneratorClass::PsdBlock2: {
      const ComplexMatrix big = psd_from(rng, 2 * n);
      ms.push_back(sub_block(big, 0, 0, n));
      ms.push_back(sub_block(big, 0, n, n));
      ms.push_back(sub_block(big, n, n, n));
      break;
    }
    case GeneratorClass::DominatedPair: {
      const ComplexMatrix a = hermitian_part(ginibre(rng, n));
      const ComplexMatrix p = psd_from(rng, n);
      ms.push_back(a);
      // |A| +- A >= 0, so B = |A| + P dominates both A and -A.
      ms.push_back(hermitian_part(abs_op(a) + p));
      break;
    }
    case GeneratorClass::NormalOrderConstrained: {
      const ComplexMatrix u = random_unitary(rng, n);
      std::vector<Complex> d(n);
      for (Complex& z : d) {
        const double imag = rng.gaussian();
        const double free_real = rng.gaussian();
        const double offset = std::abs(rng.gaussian());
        z = {std::max(free_real, -imag + offset), imag};
      }
      ms.push_back(conjugate_by(u, d));
      break;
    }
    case GeneratorClass::NormalPairSharedBasis: {
      const ComplexMatrix u = random_unitary(rng, n);
      std::vector<Complex> d1(n), d2(n);
      for (Complex& z : d1) z = rng.complex_gaussian();
      for (Complex& z : d2) z = rng.complex_gaussian();
      ms.push_back(conjugate_by(u, d1));
      ms.push_back(conjugate_by(u, d2));
      break;
    }
  }
  if (spec.scale != 1.0) {
    for (auto& m : ms) m *= spec.scale;
  }
  return out;
}

}  // namespace svineq
