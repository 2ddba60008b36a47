#include "svineq/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace svineq {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::string g6(double v) {
  std::ostringstream os;
  os.precision(6);
  os << (v == 0.0 ? 0.0 : v);  // no "-0"
  return os.str();
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Complex z = m(i, j);
      if (j) os << ", ";
      if (z.imag() == 0.0) {
        os << g6(z.real());
      } else if (z.real() == 0.0) {
        os << g6(z.imag()) << "i";
      } else {
        os << g6(z.real()) << (z.imag() < 0 ? " - " : " + ") << g6(std::abs(z.imag())) << "i";
      }
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string format_list(const std::vector<double>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << g6(v[k]);
  os << "}";
  return os.str();
}

ValueClaim value_claim(std::string name, std::optional<double> claimed, double recomputed,
                       std::optional<double> oracle = std::nullopt) {
  ValueClaim c{std::move(name), claimed, recomputed, oracle, false};
  c.discrepancy = claimed && std::abs(*claimed - recomputed) > kClaimThreshold;
  return c;
}

OrderClaim order_claim(std::string name, std::string statement, std::optional<bool> claimed_holds,
                       const ComplexMatrix& x, const ComplexMatrix& y, const Tolerance& tol) {
  OrderClaim c{std::move(name), std::move(statement), claimed_holds, loewner_leq(x, y, tol), false};
  c.discrepancy = claimed_holds && *claimed_holds != c.verdict.holds;
  return c;
}

Json loewner_to_json(const LoewnerVerdict& v) {
  return {{"holds", v.holds},
          {"min_eigenvalue", v.min_eigenvalue},
          {"eigenvalues", v.eigenvalues},
          {"tol_effective", v.tol_effective}};
}

}  // namespace

ComplexMatrix example_2_2_matrix() {
  return ComplexMatrix{{{2.0, -1.0}, {0.0, 2.0}}, {{0.0, 2.0}, {0.0, 2.0}}};
}

ComplexMatrix example_2_3_matrix() {
  return ComplexMatrix{{{1.0, 1.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 1.0}}};
}

ReproResult repro_example_2_2(const Tolerance& tol) {
  ReproResult r;
  r.fixture = "ex-2.2";
  r.matrix = example_2_2_matrix();
  r.parts = cartesian(r.matrix);
  r.flags = classify(r.matrix, tol);
  const ComplexMatrix& a1 = r.parts.a1;
  const ComplexMatrix& a2 = r.parts.a2;

  const ComplexMatrix lower = kInvSqrt2 * abs_op(a1 + a2);
  const ComplexMatrix modulus = abs_op(r.matrix);
  r.orders.push_back(order_claim("left_as_printed", "(1/sqrt2)|A1 + A2| <= |A1 + iA1|", false, lower,
                                 abs_op(a1 + a1 * Complex(0.0, 1.0)), tol));
  r.orders.push_back(order_claim("left", "(1/sqrt2)|A1 + A2| <= |A1 + iA2|", false, lower, modulus, tol));
  r.orders.push_back(
      order_claim("right", "|A1 + iA2| <= |A1| + |A2|", false, modulus, abs_op(a1) + abs_op(a2), tol));

  r.values.push_back(value_claim("commutator_norm ||A1A2 - A2A1||_F", std::nullopt,
                                 frobenius_norm(matmul(a1, a2) - matmul(a2, a1)), 4.0 * std::numbers::sqrt2));
  r.reports.push_back(check_loewner_cartesian(r.matrix, tol));

  for (const auto& o : r.orders) {
    if (!o.discrepancy) continue;
    r.discrepancies.push_back(o.name + ": stated to fail, recomputed min eigenvalue " + g6(o.verdict.min_eigenvalue) +
                              " (holds); the displayed right-hand side |A1 + iA1| does fail (see left_as_printed)");
  }
  return r;
}

ReproResult repro_example_2_3(const Tolerance& tol) {
  ReproResult r;
  r.fixture = "ex-2.3";
  r.matrix = example_2_3_matrix();
  r.parts = cartesian(r.matrix);
  r.flags = classify(r.matrix, tol);

  const double phi = std::numbers::phi;
  const SingularSpectrum s_a = singular_values(r.matrix);
  const SingularSpectrum s_upper = singular_values(abs_op(r.parts.a1) + abs_op(r.parts.a2));
  // A = A1 + iI with eig(A1) = {phi, -1/phi}, so s(A) = |phi + i|, |-1/phi + i|.
  r.values.push_back(value_claim("s1(A1 + iA2)", std::nullopt, s_a[0], std::hypot(phi, 1.0)));
  r.values.push_back(value_claim("s2(A1 + iA2)", 1.1756, s_a[1], std::hypot(1.0 / phi, 1.0)));
  r.values.push_back(value_claim("s1(|A1| + |A2|)", std::nullopt, s_upper[0], phi + 1.0));
  r.values.push_back(value_claim("s2(|A1| + |A2|)", 0.9591, s_upper[1], 1.0 / phi + 1.0));
  r.reports.push_back(check_thm_2_1(r.matrix, tol));

  for (const auto& v : r.values) {
    if (!v.discrepancy) continue;
    r.discrepancies.push_back(v.name + ": claimed " + g6(*v.claimed) + ", recomputed " + g6(v.recomputed) +
                              (v.oracle ? ", closed form " + g6(*v.oracle) : std::string()));
  }
  if (s_a[1] <= s_upper[1]) {
    r.discrepancies.push_back("claimed s2(A1 + iA2) > s2(|A1| + |A2|), recomputed " + g6(s_a[1]) +
                              " <= " + g6(s_upper[1]) + "; A is normal, so the normal-case upper bound applies");
  }
  return r;
}

Json repro_to_json(const ReproResult& r) {
  Json values = Json::array();
  for (const auto& v : r.values) {
    values.push_back({{"name", v.name},
                      {"claimed", v.claimed ? Json(*v.claimed) : Json(nullptr)},
                      {"recomputed", v.recomputed},
                      {"oracle", v.oracle ? Json(*v.oracle) : Json(nullptr)},
                      {"discrepancy", v.discrepancy}});
  }
  Json orders = Json::array();
  for (const auto& o : r.orders) {
    orders.push_back({{"name", o.name},
                      {"statement", o.statement},
                      {"claimed_holds", o.claimed_holds ? Json(*o.claimed_holds) : Json(nullptr)},
                      {"verdict", loewner_to_json(o.verdict)},
                      {"discrepancy", o.discrepancy}});
  }
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
  return {{"fixture", r.fixture},
          {"matrix", matrix_to_json(r.matrix)},
          {"A1", matrix_to_json(r.parts.a1)},
          {"A2", matrix_to_json(r.parts.a2)},
          {"normal", r.flags.normal},
          {"normality_defect", r.flags.normality_defect},
          {"values", values},
          {"orders", orders},
          {"reports", reports},
          {"discrepancies", r.discrepancies}};
}

std::string repro_to_text(const ReproResult& r) {
  std::ostringstream os;
  os << "fixture " << r.fixture << "\n";
  os << "A  = " << format_matrix(r.matrix) << "\n";
  os << "A1 = " << format_matrix(r.parts.a1) << "\n";
  os << "A2 = " << format_matrix(r.parts.a2) << "\n";
  os << "normal: " << (r.flags.normal ? "yes" : "no") << " (||A*A - AA*||_F = " << g6(r.flags.normality_defect)
     << ")\n";
  for (const auto& v : r.values) {
    os << v.name << " = " << g6(v.recomputed);
    if (v.oracle) os << " (closed form " << g6(*v.oracle) << ")";
    if (v.claimed) os << " [claimed " << g6(*v.claimed) << "]";
    os << "\n";
  }
  for (const auto& o : r.orders) {
    os << o.name << ": " << o.statement << " -> " << (o.verdict.holds ? "holds" : "FAILS")
       << ", eigenvalues of difference " << format_list(o.verdict.eigenvalues);
    if (o.claimed_holds) os << " [claimed " << (*o.claimed_holds ? "holds" : "fails") << "]";
    os << "\n";
  }
  for (const auto& rep : r.reports) {
    os << "check " << to_string(rep.id) << ": " << to_string(rep.verdict) << ", min margin " << g6(rep.min_margin)
       << "\n";
  }
  for (const auto& d : r.discrepancies) os << "DISCREPANCY " << d << "\n";
  return os.str();
}

}  // namespace svineq
