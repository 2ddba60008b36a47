#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svineq/matrix.hpp"
#include "svineq/spectral.hpp"

namespace svineq {

// Closed catalog. Each id names one checker with one hypothesis set; the
// relaxed variants (HermitianB, Nonnormal, SqrtGeneral) drop a hypothesis
// and exist as counterexample-search targets.
enum class InequalityId {
  Scalar16,           // scalar-1.6
  Bk11,               // bk-1.1
  Bk11HermitianB,     // bk-1.1-hermitian-B
  Tao12,              // tao-1.2
  Ak13,               // ak-1.3
  Ak14,               // ak-1.4
  Thm21,              // thm-2.1
  Thm21Nonnormal,     // thm-2.1-nonnormal
  Thm24,              // thm-2.4
  Thm25Plus,          // thm-2.5-plus
  Thm25Minus,         // thm-2.5-minus
  Thm27,              // thm-2.7
  Thm28,              // thm-2.8
  Cor29,              // cor-2.9
  LoewnerCartesian,   // loewner-cartesian
  ProofFacts21,       // proof-2.1
  ProofSqrtGeneral,   // proof-2.1-sqrt-general
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);
const std::vector<InequalityId>& all_inequalities();
std::size_t arity(InequalityId id);
// False for the relaxed variants and for loewner-cartesian, which are known
// to fail on some inputs.
bool expected_to_hold(InequalityId id);

enum class Verdict { Holds, Violated, HypothesisViolated };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

struct IndexMargin {
  std::size_t j = 0;  // 1-based
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs

  friend bool operator==(const IndexMargin&, const IndexMargin&) = default;
};

/// One comparison within a report. Spectral comparisons list s_j of both
/// sides; order comparisons (X <= Y) list the eigenvalues of Y - X as rhs
/// with lhs = 0.
struct SideReport {
  std::string name;
  std::vector<IndexMargin> per_index;
  double min_margin = 0.0;
  double scale = 0.0;

  friend bool operator==(const SideReport&, const SideReport&) = default;
};

struct HypothesisResidual {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool satisfied = true;

  friend bool operator==(const HypothesisResidual&, const HypothesisResidual&) = default;
};

struct InequalityReport {
  InequalityId id = InequalityId::Scalar16;
  std::vector<std::size_t> dims;
  std::vector<SideReport> sides;
  double min_margin = 0.0;
  Verdict verdict = Verdict::Holds;
  double tol_used = 0.0;
  std::vector<HypothesisResidual> hypotheses;
  std::vector<std::string> notes;

  const SideReport* side(std::string_view name) const;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

// Verdict/min_margin/tol_used from the sides and hypotheses. tol_used is
// tol.effective(max side scale).
void finalize(InequalityReport& report, const Tolerance& tol);

// Spectral side: pads both spectra with zeros to the longer length.
SideReport compare_spectra(std::string name, const SingularSpectrum& lhs, const SingularSpectrum& rhs);
// Order side for X <= Y.
SideReport compare_order(std::string name, const LoewnerVerdict& verdict);

InequalityReport check_scalar_1_6(double a, double b, const Tolerance& tol = {});
InequalityReport check_bk_1_1(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});
InequalityReport check_bk_1_1_hermitian_b(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const Tolerance& tol = {});
InequalityReport check_tao_1_2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const Tolerance& tol = {});
InequalityReport check_ak_1_3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                              const Tolerance& tol = {});
InequalityReport check_ak_1_4(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});
InequalityReport check_thm_2_1(const ComplexMatrix& a, const Tolerance& tol = {});
InequalityReport check_thm_2_1_nonnormal(const ComplexMatrix& a, const Tolerance& tol = {});
InequalityReport check_thm_2_4(const ComplexMatrix& a, const Tolerance& tol = {});

enum class JordanSide { Plus, Minus };
InequalityReport check_thm_2_5(const ComplexMatrix& a, JordanSide side, const Tolerance& tol = {});
InequalityReport check_thm_2_7(const ComplexMatrix& a, const Tolerance& tol = {});
InequalityReport check_thm_2_8(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});
InequalityReport check_cor_2_9(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});
InequalityReport check_loewner_cartesian(const ComplexMatrix& a, const Tolerance& tol = {});
InequalityReport check_proof_facts_2_1(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                       const Tolerance& tol = {});
InequalityReport check_proof_sqrt_general(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                          const Tolerance& tol = {});

// Uniform dispatch. scalar-1.6 takes two real 1x1 matrices.
InequalityReport check(InequalityId id, std::span<const ComplexMatrix> inputs, const Tolerance& tol = {});

}  // namespace svineq
