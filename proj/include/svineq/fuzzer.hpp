#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svineq/inequalities.hpp"
#include "svineq/randgen.hpp"

namespace svineq {

struct CampaignTarget {
  InequalityId id = InequalityId::Thm21;
  GeneratorClass class_tag = GeneratorClass::Normal;

  friend bool operator==(const CampaignTarget&, const CampaignTarget&) = default;
};

// The generator class whose draws satisfy the checker's hypotheses.
CampaignTarget canonical_target(InequalityId id);

struct CampaignConfig {
  std::vector<CampaignTarget> targets;
  std::vector<std::size_t> dims;
  std::size_t trials_per_dim = 1;
  std::uint64_t seed = 0;
  Tolerance tol;
};

// Throws ConfigInvalid.
void validate(const CampaignConfig& config);

/// Maps one generator draw onto the checker's inputs. Single-matrix classes
/// are drawn once per input slot; multi-matrix classes must match the arity.
/// proof-2.1 on a non-Hermitian class takes the Cartesian parts of one draw,
/// and scalar-1.6 always draws 1x1 matrices and keeps their real parts.
std::vector<ComplexMatrix> make_trial_inputs(const CampaignTarget& target, std::size_t dim, std::uint64_t seed);

/// 32 log-spaced bins over [1e-12, 1e4] plus underflow (index 0, includes
/// every margin below 1e-12) and overflow (index 33).
struct MarginHistogram {
  static constexpr std::size_t kBins = 32;
  static constexpr double kLow = 1e-12;
  static constexpr double kHigh = 1e4;

  std::array<std::uint64_t, kBins + 2> counts{};

  static std::size_t bin_index(double margin);
  static double bin_lower_edge(std::size_t bin);  // for bins 1..kBins
  void add(double margin) { ++counts[bin_index(margin)]; }
  std::uint64_t total() const;

  friend bool operator==(const MarginHistogram&, const MarginHistogram&) = default;
};

struct SideStats {
  std::string name;
  double min_margin = 0.0;
  double max_abs_margin = 0.0;
  // max over trials of |margin_j| / max(1, side scale)
  double max_rel_abs_margin = 0.0;

  friend bool operator==(const SideStats&, const SideStats&) = default;
};

struct Witness {
  InequalityId id = InequalityId::Thm21;
  std::vector<ComplexMatrix> inputs;
  Tolerance tol;
  InequalityReport report;
  std::string origin;  // free-form provenance, e.g. "campaign trial 17"

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.id == b.id && a.inputs == b.inputs && a.tol.abs == b.tol.abs && a.tol.rel == b.tol.rel &&
           a.report == b.report && a.origin == b.origin;
  }
};

struct TargetResult {
  CampaignTarget target;
  std::uint64_t trials = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t hypothesis_violated = 0;
  // Over trials whose hypotheses held; empty when none did.
  std::optional<double> min_margin;
  MarginHistogram histogram;
  std::vector<SideStats> sides;
  std::optional<Witness> worst_witness;  // the most negative Violated trial

  const SideStats* side(std::string_view name) const;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TargetResult> targets;

  // No Violated trial among targets expected to hold.
  bool passes() const;
};

/// Trial t (numbered across targets, then dims, then trials) draws its
/// generator seed from PrngStream(config.seed, t). Results do not depend on
/// the thread count; threads = 0 means hardware concurrency.
CampaignResult run_campaign(const CampaignConfig& config, unsigned threads = 0);

// Re-runs the checker on the stored inputs. Throws MalformedWitness when
// the inputs do not fit the stored id/dims.
InequalityReport replay(const Witness& witness);
// Verdict equal and min margins within 1e-12.
bool replay_matches(const Witness& witness, const InequalityReport& fresh);

enum class SearchTargetId { Bk11HermitianB, Thm21Nonnormal, LoewnerCartesianGeneral };

std::string_view to_string(SearchTargetId id);
std::optional<SearchTargetId> parse_search_target(std::string_view name);

struct SearchTarget {
  SearchTargetId id = SearchTargetId::LoewnerCartesianGeneral;
  std::size_t budget = 10000;  // checker evaluations
  std::size_t perturb_steps = 64;
  Tolerance tol;
};

struct SearchOutcome {
  std::optional<Witness> witness;  // empty: exhausted
  std::size_t evaluations = 0;
  std::size_t restarts = 0;
};

/// Random restarts followed by greedy Gaussian perturbation of the
/// underlying Ginibre parameters, halving the step on non-improvement.
/// Accepts the first report whose min margin is below -10 * tol_used.
SearchOutcome search_counterexample(const SearchTarget& target, std::uint64_t seed);

}  // namespace svineq
