#include "svineq/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "svineq/decomp.hpp"
#include "svineq/error.hpp"

namespace svineq {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct IdInfo {
  InequalityId id;
  std::string_view name;
  std::size_t arity;
  bool expected_to_hold;
};

constexpr std::array<IdInfo, 17> kCatalog{{
    {InequalityId::Scalar16, "scalar-1.6", 2, true},
    {InequalityId::Bk11, "bk-1.1", 2, true},
    {InequalityId::Bk11HermitianB, "bk-1.1-hermitian-B", 2, false},
    {InequalityId::Tao12, "tao-1.2", 3, true},
    {InequalityId::Ak13, "ak-1.3", 3, true},
    {InequalityId::Ak14, "ak-1.4", 2, true},
    {InequalityId::Thm21, "thm-2.1", 1, true},
    {InequalityId::Thm21Nonnormal, "thm-2.1-nonnormal", 1, false},
    {InequalityId::Thm24, "thm-2.4", 1, true},
    {InequalityId::Thm25Plus, "thm-2.5-plus", 1, true},
    {InequalityId::Thm25Minus, "thm-2.5-minus", 1, true},
    {InequalityId::Thm27, "thm-2.7", 1, true},
    {InequalityId::Thm28, "thm-2.8", 2, true},
    {InequalityId::Cor29, "cor-2.9", 2, true},
    {InequalityId::LoewnerCartesian, "loewner-cartesian", 1, false},
    {InequalityId::ProofFacts21, "proof-2.1", 2, true},
    {InequalityId::ProofSqrtGeneral, "proof-2.1-sqrt-general", 2, false},
}};

const IdInfo& info(InequalityId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown inequality id");
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_same_dim(std::initializer_list<const ComplexMatrix*> ms, std::string_view what) {
  const std::size_t n = (*ms.begin())->dim();
  for (const ComplexMatrix* m : ms) {
    if (m->dim() != n) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": operand dimensions differ");
  }
}

void require_hermitian(const ComplexMatrix& m, std::string_view what) {
  const double defect = hermitian_defect(m);
  if (defect > 1e-12 * std::max(1.0, frobenius_norm(m))) {
    throw Error(ErrorKind::NotHermitian, std::string(what) + ": ||M - M*||_F = " + fmt(defect));
  }
}

HypothesisResidual make_residual(std::string name, double value, double limit) {
  return {std::move(name), value, limit, value <= limit};
}

// max(Hermitian defect, -min eigenvalue of the Hermitian part, 0)
HypothesisResidual psd_residual(std::string name, const ComplexMatrix& m, const Tolerance& tol) {
  const double value =
      std::max({0.0, hermitian_defect(m), -min_eigenvalue(hermitian_part(m))});
  return make_residual(std::move(name), value, tol.effective(frobenius_norm(m)));
}

HypothesisResidual hermitian_residual(std::string name, const ComplexMatrix& m, const Tolerance& tol) {
  return make_residual(std::move(name), hermitian_defect(m), tol.effective(frobenius_norm(m)));
}

HypothesisResidual normal_residual(std::string name, const ComplexMatrix& m, const Tolerance& tol) {
  const double norm = frobenius_norm(m);
  return make_residual(std::move(name), normality_defect(m), tol.effective(norm * norm));
}

// X <= Y: residual is how far min eig(Y - X) falls below zero.
HypothesisResidual order_residual(std::string name, const ComplexMatrix& x, const ComplexMatrix& y,
                                  const Tolerance& tol) {
  const ComplexMatrix diff = hermitian_part(y - x);
  return make_residual(std::move(name), std::max(0.0, -min_eigenvalue(diff)),
                       tol.effective(frobenius_norm(diff)));
}

InequalityReport start(InequalityId id, std::initializer_list<const ComplexMatrix*> inputs) {
  InequalityReport r;
  r.id = id;
  for (const ComplexMatrix* m : inputs) r.dims.push_back(m->dim());
  return r;
}

ComplexMatrix sq(const ComplexMatrix& h) { return hermitian_part(matmul(h, h)); }

InequalityReport thm_2_1_impl(InequalityId id, const ComplexMatrix& a, const Tolerance& tol,
                              bool require_normal) {
  InequalityReport r = start(id, {&a});
  if (require_normal) r.hypotheses.push_back(normal_residual("normality_defect", a, tol));
  const CartesianPair parts = cartesian(a);
  const SingularSpectrum lower = singular_values(parts.a1 + parts.a2).scaled(kInvSqrt2);
  const SingularSpectrum middle = singular_values(a);
  const SingularSpectrum upper = singular_values(abs_op(parts.a1) + abs_op(parts.a2));
  r.sides.push_back(compare_spectra("left", lower, middle));
  r.sides.push_back(compare_spectra("right", middle, upper));
  finalize(r, tol);
  return r;
}

InequalityReport bk_1_1_impl(InequalityId id, const ComplexMatrix& a, const ComplexMatrix& b,
                             const Tolerance& tol, bool b_psd) {
  require_same_dim({&a, &b}, to_string(id));
  InequalityReport r = start(id, {&a, &b});
  r.hypotheses.push_back(psd_residual("A_psd", a, tol));
  r.hypotheses.push_back(b_psd ? psd_residual("B_psd", b, tol) : hermitian_residual("B_hermitian", b, tol));
  r.sides.push_back(compare_spectra("main", singular_values(a + b),
                                    singular_values(a + b * Complex(0.0, 1.0)).scaled(kSqrt2)));
  finalize(r, tol);
  return r;
}

}  // namespace

std::string_view to_string(InequalityId id) { return info(id).name; }

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<InequalityId>& all_inequalities() {
  static const std::vector<InequalityId> ids = [] {
    std::vector<InequalityId> out;
    for (const auto& entry : kCatalog) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

std::size_t arity(InequalityId id) { return info(id).arity; }
bool expected_to_hold(InequalityId id) { return info(id).expected_to_hold; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::Holds, Verdict::Violated, Verdict::HypothesisViolated}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

const SideReport* InequalityReport::side(std::string_view name) const {
  for (const auto& s : sides) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void finalize(InequalityReport& report, const Tolerance& tol) {
  double scale = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& s : report.sides) {
    scale = std::max(scale, s.scale);
    min_margin = std::min(min_margin, s.min_margin);
  }
  report.min_margin = report.sides.empty() ? 0.0 : min_margin;
  report.tol_used = tol.effective(scale);
  const bool hypotheses_ok = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                         [](const HypothesisResidual& h) { return h.satisfied; });
  if (!hypotheses_ok) {
    report.verdict = Verdict::HypothesisViolated;
  } else if (report.min_margin < -report.tol_used) {
    report.verdict = Verdict::Violated;
  } else {
    report.verdict = Verdict::Holds;
  }
}

SideReport compare_spectra(std::string name, const SingularSpectrum& lhs, const SingularSpectrum& rhs) {
  SideReport side;
  side.name = std::move(name);
  const std::size_t len = std::max(lhs.size(), rhs.size());
  side.min_margin = len == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < len; ++j) {
    const double l = lhs[j];
    const double r = rhs[j];
    side.per_index.push_back({j + 1, l, r, r - l});
    side.min_margin = std::min(side.min_margin, r - l);
  }
  side.scale = std::max(lhs.largest(), rhs.largest());
  return side;
}

SideReport compare_order(std::string name, const LoewnerVerdict& verdict) {
  SideReport side;
  side.name = std::move(name);
  for (std::size_t j = 0; j < verdict.eigenvalues.size(); ++j) {
    const double lambda = verdict.eigenvalues[j];
    side.per_index.push_back({j + 1, 0.0, lambda, lambda});
  }
  side.min_margin = verdict.min_eigenvalue;
  side.scale = verdict.scale;
  return side;
}

InequalityReport check_scalar_1_6(double a, double b, const Tolerance& tol) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorKind::MalformedInput, "non-finite scalar");
  InequalityReport r;
  r.id = InequalityId::Scalar16;
  r.dims = {1, 1};
  const double modulus = std::sqrt(a * a + b * b);
  const auto one = [](double v) { return SingularSpectrum({v}); };
  r.sides.push_back(compare_spectra("left", one(kInvSqrt2 * std::abs(a + b)), one(modulus)));
  r.sides.push_back(compare_spectra("right", one(modulus), one(std::abs(a) + std::abs(b))));
  finalize(r, tol);
  return r;
}

InequalityReport check_bk_1_1(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return bk_1_1_impl(InequalityId::Bk11, a, b, tol, true);
}

InequalityReport check_bk_1_1_hermitian_b(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const Tolerance& tol) {
  return bk_1_1_impl(InequalityId::Bk11HermitianB, a, b, tol, false);
}

InequalityReport check_tao_1_2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                               const Tolerance& tol) {
  require_same_dim({&a, &b, &c}, "tao-1.2");
  InequalityReport r = start(InequalityId::Tao12, {&a, &b, &c});
  const ComplexMatrix block = block2(a, b, adjoint(b), c);
  r.hypotheses.push_back(psd_residual("block_psd", block, tol));
  r.sides.push_back(compare_spectra("main", singular_values(b).scaled(2.0), singular_values(block)));
  finalize(r, tol);
  return r;
}

InequalityReport check_ak_1_3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                              const Tolerance& tol) {
  require_same_dim({&a, &b, &c}, "ak-1.3");
  InequalityReport r = start(InequalityId::Ak13, {&a, &b, &c});
  r.hypotheses.push_back(psd_residual("block_psd", block2(a, b, adjoint(b), c), tol));
  r.sides.push_back(compare_spectra("main", singular_values(b), singular_values(direct_sum(a, c))));
  finalize(r, tol);
  return r;
}

InequalityReport check_ak_1_4(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  require_same_dim({&a, &b}, "ak-1.4");
  InequalityReport r = start(InequalityId::Ak14, {&a, &b});
  r.hypotheses.push_back(hermitian_residual("A_hermitian", a, tol));
  r.hypotheses.push_back(psd_residual("B_psd", b, tol));
  r.hypotheses.push_back(order_residual("A_leq_B", a, b, tol));
  r.hypotheses.push_back(order_residual("minus_A_leq_B", -a, b, tol));
  r.sides.push_back(
      compare_spectra("main", singular_values(a).scaled(2.0), singular_values(direct_sum(b + a, b - a))));
  finalize(r, tol);
  return r;
}

InequalityReport check_thm_2_1(const ComplexMatrix& a, const Tolerance& tol) {
  return thm_2_1_impl(InequalityId::Thm21, a, tol, true);
}

InequalityReport check_thm_2_1_nonnormal(const ComplexMatrix& a, const Tolerance& tol) {
  return thm_2_1_impl(InequalityId::Thm21Nonnormal, a, tol, false);
}

InequalityReport check_thm_2_4(const ComplexMatrix& a, const Tolerance& tol) {
  InequalityReport r = start(InequalityId::Thm24, {&a});
  const CartesianPair parts = cartesian(a);
  r.hypotheses.push_back(normal_residual("normality_defect", a, tol));
  r.hypotheses.push_back(order_residual("minus_A2_leq_A1", -parts.a2, parts.a1, tol));
  const ComplexMatrix positive_parts = 2.0 * (jordan(parts.a1).plus + jordan(parts.a2).plus);
  r.sides.push_back(compare_spectra("main", singular_values(a),
                                    singular_values(direct_sum(positive_parts, parts.a1 + parts.a2))));
  finalize(r, tol);
  return r;
}

InequalityReport check_thm_2_5(const ComplexMatrix& a, JordanSide side, const Tolerance& tol) {
  require_hermitian(a, "thm-2.5");
  const bool plus = side == JordanSide::Plus;
  InequalityReport r = start(plus ? InequalityId::Thm25Plus : InequalityId::Thm25Minus, {&a});
  const ComplexMatrix h = hermitian_part(a);
  const JordanPair parts = jordan(h);
  const ComplexMatrix modulus = abs_op(h);
  // |A| -+ A over 2 is the complementary Jordan part.
  const ComplexMatrix complement = 0.5 * (plus ? modulus - h : modulus + h);
  r.sides.push_back(compare_spectra("main", singular_values(plus ? parts.plus : parts.minus),
                                    singular_values(direct_sum(modulus, hermitian_part(complement)))));
  finalize(r, tol);
  return r;
}

InequalityReport check_thm_2_7(const ComplexMatrix& a, const Tolerance& tol) {
  InequalityReport r = start(InequalityId::Thm27, {&a});
  const CartesianPair parts = cartesian(a);
  const SingularSpectrum s = singular_values(parts.a1 + parts.a2);
  const SingularSpectrum t = singular_values(a + adjoint(a) * Complex(0.0, 1.0));
  r.sides.push_back(compare_spectra("left", s.scaled(kSqrt2), t));
  r.sides.push_back(compare_spectra("right", t, s.scaled(2.0)));
  finalize(r, tol);
  return r;
}

InequalityReport check_thm_2_8(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  require_same_dim({&a, &b}, "thm-2.8");
  InequalityReport r = start(InequalityId::Thm28, {&a, &b});
  const ComplexMatrix a_star = adjoint(a);
  const ComplexMatrix b_star = adjoint(b);
  const ComplexMatrix anticommutator = matmul(a, b) + matmul(b, a);
  const ComplexMatrix left_block = hermitian_part(matmul(a_star, a) + matmul(b_star, b));
  const ComplexMatrix right_block = hermitian_part(matmul(a, a_star) + matmul(b, b_star));
  r.sides.push_back(
      compare_spectra("main", singular_values(anticommutator), singular_values(direct_sum(left_block, right_block))));
  finalize(r, tol);
  return r;
}

InequalityReport check_cor_2_9(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  require_same_dim({&a, &b}, "cor-2.9");
  InequalityReport r = start(InequalityId::Cor29, {&a, &b});
  r.hypotheses.push_back(normal_residual("A_normality_defect", a, tol));
  r.hypotheses.push_back(normal_residual("B_normality_defect", b, tol));
  const ComplexMatrix anticommutator = matmul(a, b) + matmul(b, a);
  const ComplexMatrix block = hermitian_part(matmul(a, adjoint(a)) + matmul(b, adjoint(b)));
  r.sides.push_back(
      compare_spectra("main", singular_values(anticommutator), singular_values(direct_sum(block, block))));
  finalize(r, tol);
  return r;
}

InequalityReport check_loewner_cartesian(const ComplexMatrix& a, const Tolerance& tol) {
  InequalityReport r = start(InequalityId::LoewnerCartesian, {&a});
  const CartesianPair parts = cartesian(a);
  const ComplexMatrix modulus = abs_op(a);
  const ComplexMatrix lower = kInvSqrt2 * abs_op(parts.a1 + parts.a2);
  const ComplexMatrix upper = abs_op(parts.a1) + abs_op(parts.a2);
  r.sides.push_back(compare_order("left", loewner_leq(lower, modulus, tol)));
  r.sides.push_back(compare_order("right", loewner_leq(modulus, upper, tol)));
  finalize(r, tol);
  return r;
}

InequalityReport check_proof_facts_2_1(const ComplexMatrix& a1, const ComplexMatrix& a2, const Tolerance& tol) {
  require_same_dim({&a1, &a2}, "proof-2.1");
  require_hermitian(a1, "proof-2.1 A1");
  require_hermitian(a2, "proof-2.1 A2");
  InequalityReport r = start(InequalityId::ProofFacts21, {&a1, &a2});
  const ComplexMatrix h1 = hermitian_part(a1);
  const ComplexMatrix h2 = hermitian_part(a2);
  const ComplexMatrix sum_sq = sq(h1) + sq(h2);
  r.sides.push_back(compare_order("square", loewner_leq(sq(h1 + h2), 2.0 * sum_sq, tol)));

  const double commutator = frobenius_norm(matmul(h1, h2) - matmul(h2, h1));
  const double limit = tol.effective(frobenius_norm(h1) * frobenius_norm(h2));
  if (commutator <= limit) {
    r.sides.push_back(compare_order("sqrt", loewner_leq(psd_sqrt(sum_sq), abs_op(h1) + abs_op(h2), tol)));
  } else {
    r.notes.push_back("sqrt side skipped: commutator defect " + fmt(commutator) + " exceeds " + fmt(limit));
  }
  finalize(r, tol);
  return r;
}

InequalityReport check_proof_sqrt_general(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                          const Tolerance& tol) {
  require_same_dim({&a1, &a2}, "proof-2.1-sqrt-general");
  require_hermitian(a1, "proof-2.1-sqrt-general A1");
  require_hermitian(a2, "proof-2.1-sqrt-general A2");
  InequalityReport r = start(InequalityId::ProofSqrtGeneral, {&a1, &a2});
  const ComplexMatrix h1 = hermitian_part(a1);
  const ComplexMatrix h2 = hermitian_part(a2);
  r.sides.push_back(
      compare_order("sqrt", loewner_leq(psd_sqrt(sq(h1) + sq(h2)), abs_op(h1) + abs_op(h2), tol)));
  finalize(r, tol);
  return r;
}

InequalityReport check(InequalityId id, std::span<const ComplexMatrix> in, const Tolerance& tol) {
  if (in.size() != arity(id)) {
    throw Error(ErrorKind::ArityMismatch, std::string(to_string(id)) + " takes " + std::to_string(arity(id)) +
                                              " matrices, got " + std::to_string(in.size()));
  }
  switch (id) {
    case InequalityId::Scalar16: {
      for (const auto& m : in) {
        if (m.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "scalar-1.6 takes 1x1 matrices");
        if (m(0, 0).imag() != 0.0) throw Error(ErrorKind::MalformedInput, "scalar-1.6 takes real entries");
      }
      return check_scalar_1_6(in[0](0, 0).real(), in[1](0, 0).real(), tol);
    }
    case InequalityId::Bk11: return check_bk_1_1(in[0], in[1], tol);
    case InequalityId::Bk11HermitianB: return check_bk_1_1_hermitian_b(in[0], in[1], tol);
    case InequalityId::Tao12: return check_tao_1_2(in[0], in[1], in[2], tol);
    case InequalityId::Ak13: return check_ak_1_3(in[0], in[1], in[2], tol);
    case InequalityId::Ak14: return check_ak_1_4(in[0], in[1], tol);
    case InequalityId::Thm21: return check_thm_2_1(in[0], tol);
    case InequalityId::Thm21Nonnormal: return check_thm_2_1_nonnormal(in[0], tol);
    case InequalityId::Thm24: return check_thm_2_4(in[0], tol);
    case InequalityId::Thm25Plus: return check_thm_2_5(in[0], JordanSide::Plus, tol);
    case InequalityId::Thm25Minus: return check_thm_2_5(in[0], JordanSide::Minus, tol);
    case InequalityId::Thm27: return check_thm_2_7(in[0], tol);
    case InequalityId::Thm28: return check_thm_2_8(in[0], in[1], tol);
    case InequalityId::Cor29: return check_cor_2_9(in[0], in[1], tol);
    case InequalityId::LoewnerCartesian: return check_loewner_cartesian(in[0], tol);
    case InequalityId::ProofFacts21: return check_proof_facts_2_1(in[0], in[1], tol);
    case InequalityId::ProofSqrtGeneral: return check_proof_sqrt_general(in[0], in[1], tol);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown inequality id");
}

}  // namespace svineq
