#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "svineq/matrix.hpp"

namespace svineq {

/// Counter-based stream: draw k of stream (seed, index) is a fixed function of
/// (seed, index, k), so trials keyed by index can run in any order.
class PrngStream {
 public:
  PrngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  // Standard normal (Box-Muller; the second variate is cached).
  double gaussian();
  // Complex Gaussian with E|z|^2 = 1.
  Complex complex_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

std::uint64_t mix64(std::uint64_t x);

enum class GeneratorClass {
  Ginibre,
  Hermitian,
  Psd,
  Unitary,
  Normal,
  PsdBlock2,
  DominatedPair,
  NormalOrderConstrained,
  NormalPairSharedBasis,
};

std::string_view to_string(GeneratorClass c);
std::optional<GeneratorClass> parse_generator_class(std::string_view name);
const std::vector<GeneratorClass>& all_generator_classes();
// Number of matrices one draw of the class produces.
std::size_t class_arity(GeneratorClass c);

struct GeneratorSpec {
  GeneratorClass class_tag = GeneratorClass::Ginibre;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

struct GeneratedInput {
  std::vector<ComplexMatrix> matrices;
  GeneratorSpec provenance;
};

/// Draws one instance of the class. Every output except `unitary` is
/// multiplied by spec.scale. Throws InvalidSpec for dim outside [1, 64] or
/// a non-positive scale.
GeneratedInput generate(const GeneratorSpec& spec);

// Building blocks, exposed for the search and tests.
ComplexMatrix ginibre(PrngStream& rng, std::size_t n);
// Householder QR of a Ginibre matrix with R's diagonal made positive real.
ComplexMatrix random_unitary(PrngStream& rng, std::size_t n);

}  // namespace svineq
