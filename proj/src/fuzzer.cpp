#include "svineq/fuzzer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "svineq/decomp.hpp"
#include "svineq/error.hpp"

namespace svineq {

namespace {

constexpr double kSearchThresholdFactor = 10.0;
constexpr double kInitialStep = 0.5;

bool is_hermitian_class(GeneratorClass c) { return c == GeneratorClass::Hermitian || c == GeneratorClass::Psd; }

bool takes_cartesian_parts(const CampaignTarget& t) {
  return (t.id == InequalityId::ProofFacts21 || t.id == InequalityId::ProofSqrtGeneral) &&
         class_arity(t.class_tag) == 1 && !is_hermitian_class(t.class_tag);
}

std::vector<ComplexMatrix> draw(GeneratorClass c, std::size_t dim, std::uint64_t seed) {
  return generate({c, dim, seed, 1.0}).matrices;
}

void check_target(const CampaignTarget& t) {
  const std::size_t need = arity(t.id);
  const std::size_t have = class_arity(t.class_tag);
  if (t.id == InequalityId::Scalar16 && have != 1) {
    throw Error(ErrorKind::ConfigInvalid, "scalar-1.6 needs a single-matrix class");
  }
  if (have != 1 && have != need) {
    throw Error(ErrorKind::ConfigInvalid, std::string(to_string(t.id)) + " takes " + std::to_string(need) +
                                              " matrices but class " + std::string(to_string(t.class_tag)) +
                                              " yields " + std::to_string(have));
  }
}

struct TrialOutcome {
  bool hypothesis_violated = false;
  Verdict verdict = Verdict::Holds;
  double min_margin = 0.0;
  struct Side {
    std::string name;
    double min_margin;
    double max_abs_margin;
    double max_rel_abs_margin;
  };
  std::vector<Side> sides;
};

struct TrialKey {
  std::size_t target = 0;
  std::size_t dim = 0;
  std::uint64_t index = 0;
};

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
  PrngStream stream(campaign_seed, trial);
  return stream.next_u64();
}

TrialOutcome run_trial(const CampaignConfig& config, const TrialKey& key) {
  const CampaignTarget& target = config.targets[key.target];
  TrialOutcome out;
  InequalityReport report;
  try {
    const auto inputs = make_trial_inputs(target, key.dim, trial_seed(config.seed, key.index));
    report = check(target.id, inputs, config.tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotHermitian || e.kind() == ErrorKind::NotPSD) {
      out.hypothesis_violated = true;
      out.verdict = Verdict::HypothesisViolated;
      return out;
    }
    throw;
  }
  out.verdict = report.verdict;
  out.hypothesis_violated = report.verdict == Verdict::HypothesisViolated;
  out.min_margin = report.min_margin;
  for (const auto& s : report.sides) {
    double max_abs = 0.0;
    for (const auto& m : s.per_index) max_abs = std::max(max_abs, std::abs(m.margin));
    out.sides.push_back({s.name, s.min_margin, max_abs, max_abs / std::max(1.0, s.scale)});
  }
  return out;
}

}  // namespace

CampaignTarget canonical_target(InequalityId id) {
  switch (id) {
    case InequalityId::Scalar16: return {id, GeneratorClass::Hermitian};
    case InequalityId::Bk11: return {id, GeneratorClass::Psd};
    case InequalityId::Bk11HermitianB: return {id, GeneratorClass::Hermitian};
    case InequalityId::Tao12:
    case InequalityId::Ak13: return {id, GeneratorClass::PsdBlock2};
    case InequalityId::Ak14: return {id, GeneratorClass::DominatedPair};
    case InequalityId::Thm21: return {id, GeneratorClass::Normal};
    case InequalityId::Thm21Nonnormal: return {id, GeneratorClass::Ginibre};
    case InequalityId::Thm24: return {id, GeneratorClass::NormalOrderConstrained};
    case InequalityId::Thm25Plus:
    case InequalityId::Thm25Minus: return {id, GeneratorClass::Hermitian};
    case InequalityId::Thm27:
    case InequalityId::Thm28: return {id, GeneratorClass::Ginibre};
    case InequalityId::Cor29: return {id, GeneratorClass::NormalPairSharedBasis};
    case InequalityId::LoewnerCartesian: return {id, GeneratorClass::Ginibre};
    case InequalityId::ProofFacts21: return {id, GeneratorClass::Normal};
    case InequalityId::ProofSqrtGeneral: return {id, GeneratorClass::Hermitian};
  }
  throw Error(ErrorKind::ConfigInvalid, "unknown inequality id");
}

void validate(const CampaignConfig& config) {
  if (config.targets.empty()) throw Error(ErrorKind::ConfigInvalid, "no targets");
  if (config.dims.empty()) throw Error(ErrorKind::ConfigInvalid, "no dimensions");
  for (std::size_t d : config.dims) {
    if (d < 1 || d > kMaxInputDim) {
      throw Error(ErrorKind::ConfigInvalid, "dimension " + std::to_string(d) + " outside [1, 64]");
    }
  }
  if (config.trials_per_dim < 1) throw Error(ErrorKind::ConfigInvalid, "trials_per_dim must be >= 1");
  if (!config.tol.valid()) throw Error(ErrorKind::ConfigInvalid, "tolerances must be finite and >= 0");
  for (const auto& t : config.targets) check_target(t);
}

std::vector<ComplexMatrix> make_trial_inputs(const CampaignTarget& target, std::size_t dim, std::uint64_t seed) {
  check_target(target);
  const std::size_t need = arity(target.id);
  const auto slot_seed = [seed](std::size_t slot) { return mix64(seed + 0x9E3779B97F4A7C15ULL * (slot + 1)); };

  if (target.id == InequalityId::Scalar16) {
    std::vector<ComplexMatrix> out;
    for (std::size_t slot = 0; slot < 2; ++slot) {
      const ComplexMatrix m = draw(target.class_tag, 1, slot_seed(slot)).front();
      out.push_back(ComplexMatrix{{Complex(m(0, 0).real(), 0.0)}});
    }
    return out;
  }
  if (takes_cartesian_parts(target)) {
    const CartesianPair parts = cartesian(draw(target.class_tag, dim, seed).front());
    return {parts.a1, parts.a2};
  }
  if (target.id == InequalityId::Bk11HermitianB) {
    // A stays PSD; only B comes from the requested class.
    return {draw(GeneratorClass::Psd, dim, slot_seed(0)).front(),
            hermitian_part(draw(target.class_tag, dim, slot_seed(1)).front())};
  }
  if (class_arity(target.class_tag) == need) return draw(target.class_tag, dim, seed);

  std::vector<ComplexMatrix> out;
  for (std::size_t slot = 0; slot < need; ++slot) out.push_back(draw(target.class_tag, dim, slot_seed(slot)).front());
  return out;
}

std::size_t MarginHistogram::bin_index(double margin) {
  if (!(margin >= kLow)) return 0;
  if (margin >= kHigh) return kBins + 1;
  const double position = (std::log10(margin) - std::log10(kLow)) / (std::log10(kHigh) - std::log10(kLow));
  const auto bin = static_cast<std::size_t>(position * static_cast<double>(kBins));
  return 1 + std::min(bin, kBins - 1);
}

double MarginHistogram::bin_lower_edge(std::size_t bin) {
  const double step = (std::log10(kHigh) - std::log10(kLow)) / static_cast<double>(kBins);
  return std::pow(10.0, std::log10(kLow) + step * static_cast<double>(bin - 1));
}

std::uint64_t MarginHistogram::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

const SideStats* TargetResult::side(std::string_view name) const {
  for (const auto& s : sides) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool CampaignResult::passes() const {
  return std::none_of(targets.begin(), targets.end(), [](const TargetResult& t) {
    return expected_to_hold(t.target.id) && t.violated > 0;
  });
}

CampaignResult run_campaign(const CampaignConfig& config, unsigned threads) {
  validate(config);

  std::vector<TrialKey> keys;
  std::uint64_t index = 0;
  for (std::size_t t = 0; t < config.targets.size(); ++t) {
    for (std::size_t d : config.dims) {
      for (std::size_t k = 0; k < config.trials_per_dim; ++k) keys.push_back({t, d, index++});
    }
  }

  std::vector<TrialOutcome> outcomes(keys.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failure_at = keys.size();
  std::exception_ptr failure;

  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1)) {
      try {
        outcomes[i] = run_trial(config, keys[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failure_at) {
          failure_at = i;
          failure = std::current_exception();
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, keys.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  // Sequential reduction in trial order keeps the result schedule-independent.
  CampaignResult result;
  result.config = config;
  for (const auto& target : config.targets) {
    TargetResult tr;
    tr.target = target;
    result.targets.push_back(std::move(tr));
  }

  std::vector<std::optional<std::size_t>> worst(config.targets.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    TargetResult& tr = result.targets[keys[i].target];
    ++tr.trials;
    if (o.hypothesis_violated) {
      ++tr.hypothesis_violated;
      continue;
    }
    if (o.verdict == Verdict::Violated) {
      ++tr.violated;
      auto& w = worst[keys[i].target];
      if (!w || o.min_margin < outcomes[*w].min_margin) w = i;
    } else {
      ++tr.holds;
    }
    tr.min_margin = tr.min_margin ? std::min(*tr.min_margin, o.min_margin) : o.min_margin;
    tr.histogram.add(o.min_margin);
    for (const auto& s : o.sides) {
      auto it = std::find_if(tr.sides.begin(), tr.sides.end(), [&](const SideStats& x) { return x.name == s.name; });
      if (it == tr.sides.end()) {
        tr.sides.push_back({s.name, s.min_margin, s.max_abs_margin, s.max_rel_abs_margin});
      } else {
        it->min_margin = std::min(it->min_margin, s.min_margin);
        it->max_abs_margin = std::max(it->max_abs_margin, s.max_abs_margin);
        it->max_rel_abs_margin = std::max(it->max_rel_abs_margin, s.max_rel_abs_margin);
      }
    }
  }

  for (std::size_t t = 0; t < config.targets.size(); ++t) {
    if (!worst[t]) continue;
    const TrialKey& key = keys[*worst[t]];
    const CampaignTarget& target = config.targets[t];
    Witness w;
    w.id = target.id;
    w.inputs = make_trial_inputs(target, key.dim, trial_seed(config.seed, key.index));
    w.tol = config.tol;
    w.report = check(target.id, w.inputs, config.tol);
    w.origin = "campaign seed " + std::to_string(config.seed) + " trial " + std::to_string(key.index) +
               " class " + std::string(to_string(target.class_tag)) + " dim " + std::to_string(key.dim);
    result.targets[t].worst_witness = std::move(w);
  }
  return result;
}

InequalityReport replay(const Witness& witness) {
  if (witness.report.id != witness.id) throw Error(ErrorKind::MalformedWitness, "report id differs from witness id");
  if (witness.inputs.size() != arity(witness.id)) {
    throw Error(ErrorKind::MalformedWitness, "expected " + std::to_string(arity(witness.id)) + " inputs");
  }
  if (witness.report.dims.size() != witness.inputs.size()) {
    throw Error(ErrorKind::MalformedWitness, "stored dims do not match the inputs");
  }
  for (std::size_t k = 0; k < witness.inputs.size(); ++k) {
    if (witness.inputs[k].dim() != witness.report.dims[k] || witness.inputs[k].empty()) {
      throw Error(ErrorKind::MalformedWitness, "input " + std::to_string(k) + " has dimension " +
                                                   std::to_string(witness.inputs[k].dim()) + ", stored " +
                                                   std::to_string(witness.report.dims[k]));
    }
    if (!all_finite(witness.inputs[k])) throw Error(ErrorKind::MalformedWitness, "non-finite input");
  }
  try {
    return check(witness.id, witness.inputs, witness.tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedWitness, e.what());
  }
}

bool replay_matches(const Witness& witness, const InequalityReport& fresh) {
  return fresh.verdict == witness.report.verdict &&
         std::abs(fresh.min_margin - witness.report.min_margin) <= 1e-12;
}

std::string_view to_string(SearchTargetId id) {
  switch (id) {
    case SearchTargetId::Bk11HermitianB: return "bk-1.1-hermitian-B";
    case SearchTargetId::Thm21Nonnormal: return "thm-2.1-nonnormal";
    case SearchTargetId::LoewnerCartesianGeneral: return "loewner-cartesian-general";
  }
  return "unknown";
}

std::optional<SearchTargetId> parse_search_target(std::string_view name) {
  for (auto id : {SearchTargetId::Bk11HermitianB, SearchTargetId::Thm21Nonnormal,
                  SearchTargetId::LoewnerCartesianGeneral}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

struct SearchProblem {
  InequalityId checker;
  std::vector<std::size_t> dims;
  std::size_t parameters;  // Ginibre matrices behind the inputs
  std::vector<ComplexMatrix> (*inputs)(const std::vector<ComplexMatrix>&);
};

SearchProblem problem_for(SearchTargetId id) {
  switch (id) {
    case SearchTargetId::Bk11HermitianB:
      return {InequalityId::Bk11HermitianB, {2, 3}, 2, [](const std::vector<ComplexMatrix>& g) {
                return std::vector<ComplexMatrix>{hermitian_part(matmul(adjoint(g[0]), g[0])),
                                                  hermitian_part(g[1])};
              }};
    case SearchTargetId::Thm21Nonnormal:
      return {InequalityId::Thm21Nonnormal, {2, 3}, 1,
              [](const std::vector<ComplexMatrix>& g) { return std::vector<ComplexMatrix>{g[0]}; }};
    case SearchTargetId::LoewnerCartesianGeneral:
      return {InequalityId::LoewnerCartesian, {2}, 1,
              [](const std::vector<ComplexMatrix>& g) { return std::vector<ComplexMatrix>{g[0]}; }};
  }
  throw Error(ErrorKind::InvalidSpec, "unknown search target");
}

bool is_witness(const InequalityReport& r) {
  return r.verdict == Verdict::Violated && r.min_margin < -kSearchThresholdFactor * r.tol_used;
}

}  // namespace

SearchOutcome search_counterexample(const SearchTarget& target, std::uint64_t seed) {
  const SearchProblem problem = problem_for(target.id);
  SearchOutcome outcome;

  const auto evaluate = [&](const std::vector<ComplexMatrix>& params) {
    ++outcome.evaluations;
    return check(problem.checker, problem.inputs(params), target.tol);
  };
  const auto accept = [&](const std::vector<ComplexMatrix>& params, InequalityReport report, std::size_t restart) {
    Witness w;
    w.id = problem.checker;
    w.inputs = problem.inputs(params);
    w.tol = target.tol;
    w.report = std::move(report);
    w.origin = "search " + std::string(to_string(target.id)) + " seed " + std::to_string(seed) + " restart " +
               std::to_string(restart) + " evaluation " + std::to_string(outcome.evaluations);
    outcome.witness = std::move(w);
  };

  for (std::size_t restart = 0; outcome.evaluations < target.budget; ++restart) {
    ++outcome.restarts;
    PrngStream rng(seed, restart);
    const std::size_t dim = problem.dims[restart % problem.dims.size()];
    std::vector<ComplexMatrix> params;
    for (std::size_t k = 0; k < problem.parameters; ++k) params.push_back(ginibre(rng, dim));

    InequalityReport best = evaluate(params);
    if (is_witness(best)) {
      accept(params, std::move(best), restart);
      return outcome;
    }
    double step = kInitialStep;
    for (std::size_t s = 0; s < target.perturb_steps && outcome.evaluations < target.budget; ++s) {
      std::vector<ComplexMatrix> candidate = params;
      for (auto& g : candidate) g += step * ginibre(rng, dim);
      InequalityReport report = evaluate(candidate);
      if (report.verdict != Verdict::HypothesisViolated && report.min_margin < best.min_margin) {
        params = std::move(candidate);
        best = std::move(report);
        if (is_witness(best)) {
          accept(params, std::move(best), restart);
          return outcome;
        }
      } else {
        step *= 0.5;
      }
    }
  }
  return outcome;
}

}  // namespace svineq
