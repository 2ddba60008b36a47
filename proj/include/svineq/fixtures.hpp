#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svineq/decomp.hpp"
#include "svineq/inequalities.hpp"
#include "svineq/serialize.hpp"

namespace svineq {

// [[2 - i, 2i], [2i, 2i]]
ComplexMatrix example_2_2_matrix();
// [[1 + i, 1], [1, i]]
ComplexMatrix example_2_3_matrix();

inline constexpr double kClaimThreshold = 1e-3;

struct ValueClaim {
  std::string name;
  std::optional<double> claimed;  // value printed in the source, if any
  double recomputed = 0.0;
  std::optional<double> oracle;   // closed-form cross-check, if any
  bool discrepancy = false;       // |claimed - recomputed| > 1e-3
};

struct OrderClaim {
  std::string name;
  std::string statement;
  std::optional<bool> claimed_holds;
  LoewnerVerdict verdict;
  bool discrepancy = false;
};

struct ReproResult {
  std::string fixture;
  ComplexMatrix matrix;
  CartesianPair parts;
  ClassFlags flags;
  std::vector<ValueClaim> values;
  std::vector<OrderClaim> orders;
  std::vector<InequalityReport> reports;
  std::vector<std::string> discrepancies;
};

ReproResult repro_example_2_2(const Tolerance& tol = {});
ReproResult repro_example_2_3(const Tolerance& tol = {});

Json repro_to_json(const ReproResult& r);
// Six significant digits, one fact per line, DISCREPANCY lines last.
std::string repro_to_text(const ReproResult& r);

}  // namespace svineq
