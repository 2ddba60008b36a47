// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "svineq/cli.hpp"
#include "svineq/decomp.hpp"
#include "svineq/fixtures.hpp"
#include "svineq/randgen.hpp"
#include "svineq/serialize.hpp"

using namespace svineq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const fs::path kWork = fs::path(SVINEQ_TEST_TMPDIR) / "acceptance";

const Json* find_named(const Json& list, const std::string& name) {
  for (const Json& e : list) {
    if (e.at("name") == name) return &e;
  }
  return nullptr;
}

Outcome example_2_3() {
  Outcome o;
  const auto run = cli_run({"repro", "ex-2.3"});
  o.require(run.code == 0, "exit code " + std::to_string(run.code));
  const Json file = Json::parse(run.out.substr(run.out.find("{\n  \"")));
  const Json& result = file.at("result");
  const Json* s1 = find_named(result.at("values"), "s1(A1 + iA2)");
  const Json* s2 = find_named(result.at("values"), "s2(A1 + iA2)");
  const Json* t2 = find_named(result.at("values"), "s2(|A1| + |A2|)");
  o.require(s1 && s2 && t2, "values present");
  if (!(s1 && s2 && t2)) return o;

  const double s2v = s2->at("recomputed");
  o.require(std::abs(s2v - 1.1756) <= 1e-3, "s2 = " + num(s2v) + " vs 1.1756");

  // Independent oracle: A = A1 + iI is normal, so s_j = |eig(A1) + i|.
  const auto eig = oracle::hermitian_eigenvalues(ComplexMatrix{{1, 1}, {1, 0}});
  const double s1_oracle = std::max(std::hypot(eig[0], 1.0), std::hypot(eig[1], 1.0));
  const double s1v = s1->at("recomputed");
  o.require(std::abs(s1v - s1_oracle) <= 1e-9, "s1 = " + num(s1v) + " vs oracle " + num(s1_oracle));
  const double lapack_s1 = oracle::singular_values(example_2_3_matrix())[0];
  o.require(std::abs(s1v - lapack_s1) <= 1e-9, "s1 vs LAPACK");

  o.require(t2->at("discrepancy") == true, "0.9591 discrepancy flagged in JSON");
  o.require(run.out.find("DISCREPANCY") != std::string::npos, "DISCREPANCY line printed");
  o.note("s1 " + num(s1v) + ", s2 " + num(s2v) + ", s2(|A1|+|A2|) " + num(t2->at("recomputed").get<double>()) +
         " vs claimed 0.9591");
  return o;
}

Outcome example_2_2() {
  Outcome o;
  const auto run = cli_run({"repro", "ex-2.2", "--json"});
  o.require(run.code == 0, "exit code " + std::to_string(run.code));
  const Json result = Json::parse(run.out).at("result");
  o.require(matrix_from_json(result.at("A1")) == ComplexMatrix{{2, 0}, {0, 0}}, "A1 exact");
  o.require(matrix_from_json(result.at("A2")) == ComplexMatrix{{-1, 2}, {2, 2}}, "A2 exact");
  // The two order inequalities as printed in the source.
  for (const std::string name : {"left_as_printed", "right"}) {
    const Json* order = find_named(result.at("orders"), name);
    o.require(order != nullptr, name + " present");
    if (!order) continue;
    const double min_eig = order->at("verdict").at("min_eigenvalue");
    o.require(order->at("verdict").at("holds") == false && min_eig < -1e-6, name + " violated");
    o.note(name + " min eig " + num(min_eig));
  }
  return o;
}

struct CriterionTarget {
  const char* ineq;
  const char* klass;
};

constexpr CriterionTarget kTheoremTargets[] = {
    {"thm-2.1", "normal"},      {"thm-2.5-plus", "hermitian"},      {"thm-2.5-minus", "hermitian"},
    {"thm-2.7", "ginibre"},     {"thm-2.8", "ginibre"},             {"cor-2.9", "normal_pair_shared_basis"},
    {"bk-1.1", "psd"},          {"tao-1.2", "psd_block2"},          {"ak-1.3", "psd_block2"},
    {"ak-1.4", "dominated_pair"}, {"proof-2.1", "normal"},
};

std::vector<std::string> theorem_fuzz_args(const fs::path& out) {
  std::string ineqs;
  for (const auto& t : kTheoremTargets) ineqs += (ineqs.empty() ? "" : ",") + std::string(t.ineq);
  return {"fuzz", "--ineq", ineqs, "--dims", "2,3,5,8", "--trials", "1000", "--seed", "42", "--out", out.string()};
}

Outcome theorem_suites(Json& campaign) {
  Outcome o;
  const fs::path out = kWork / "theorems.json";
  const auto run = cli_run(theorem_fuzz_args(out));
  o.require(run.code == 0, "fuzz exit code " + std::to_string(run.code));
  campaign = Json::parse(slurp(out));
  const Json& targets = campaign.at("result").at("targets");
  o.require(targets.size() == std::size(kTheoremTargets), "target count");
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < targets.size() && k < std::size(kTheoremTargets); ++k) {
    const Json& t = targets[k];
    const std::string name = t.at("ineq").get<std::string>() + "/" + t.at("class").get<std::string>();
    o.require(t.at("ineq") == kTheoremTargets[k].ineq && t.at("class") == kTheoremTargets[k].klass,
              name + " is the requested target");
    o.require(t.at("trials") == 4000, name + " trials");
    o.require(t.at("violated") == 0, name + " violated " + t.at("violated").dump());
    o.require(t.at("hypothesis_violated") == 0, name + " hypothesis_violated " + t.at("hypothesis_violated").dump());
    total += t.at("trials").get<std::uint64_t>();
  }
  o.note(std::to_string(total) + " trials, 0 violated");
  return o;
}

Outcome thm_2_7_sharpness(const Json& campaign) {
  Outcome o;
  for (const Json& t : campaign.at("result").at("targets")) {
    if (t.at("ineq") != "thm-2.7") continue;
    const Json* left = find_named(t.at("sides"), "left");
    o.require(left != nullptr, "left side stats");
    if (!left) return o;
    const double rel = left->at("max_rel_abs_margin");
    o.require(rel <= 1e-8, "max |left margin| / scale = " + num(rel));
    o.note("max |left margin| / scale " + num(rel) + ", max |left margin| " +
           num(left->at("max_abs_margin").get<double>()));
    return o;
  }
  o.require(false, "thm-2.7 target present");
  return o;
}

Outcome searches() {
  Outcome o;
  struct Case {
    const char* target;
    const char* budget;
  };
  for (const Case c : {Case{"loewner-cartesian-general", "10000"}, Case{"bk-1.1-hermitian-B", "100000"}}) {
    const fs::path out = kWork / (std::string(c.target) + ".json");
    const auto run = cli_run({"search", "--target", c.target, "--budget", c.budget, "--out", out.string()});
    o.require(run.code == 0, std::string(c.target) + " exit code " + std::to_string(run.code));
    if (run.code != 0) continue;
    const Json file = Json::parse(slurp(out));
    const Witness w = witness_from_json(file.at("result"));
    const InequalityReport fresh = replay(w);
    o.require(fresh.verdict == Verdict::Violated, std::string(c.target) + " replays Violated");
    o.require(replay_matches(w, fresh), std::string(c.target) + " replays identically");
    o.require(fresh.min_margin < -10.0 * fresh.tol_used, std::string(c.target) + " margin below -10 tol");
    const auto rerun = cli_run({"replay", out.string()});
    o.require(rerun.code == 1, std::string(c.target) + " cli replay exit 1");
    o.note(std::string(c.target) + " n=" + std::to_string(w.inputs[0].dim()) + " margin " + num(fresh.min_margin) +
           " tol " + num(fresh.tol_used));
  }
  return o;
}

Outcome eigensolver() {
  Outcome o;
  double worst_recon = 0, worst_unit = 0;
  for (std::size_t n : {2, 4, 8, 16, 32}) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const ComplexMatrix m = generate({GeneratorClass::Hermitian, n, 0xE16E0000 + 1000 * n + k, 1.0}).matrices[0];
      const auto e = hermitian_eig(m);
      ComplexMatrix scaled(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = e.vectors(i, j) * e.eigenvalues[j];
      }
      const double recon = frobenius_norm(oracle::naive_matmul(scaled, adjoint(e.vectors)) - m) /
                           std::max(1.0, frobenius_norm(m));
      const double unit = frobenius_norm(oracle::naive_matmul(adjoint(e.vectors), e.vectors) -
                                         ComplexMatrix::identity(n)) /
                          std::sqrt(double(n));
      worst_recon = std::max(worst_recon, recon);
      worst_unit = std::max(worst_unit, unit);
    }
  }
  o.require(worst_recon <= 1e-10, "reconstruction " + num(worst_recon));
  o.require(worst_unit <= 1e-10, "unitarity " + num(worst_unit));
  o.note("1000 matrices, worst reconstruction/scale " + num(worst_recon) + ", unitarity/sqrt(n) " + num(worst_unit));
  return o;
}

Outcome thm_2_4_campaign() {
  Outcome o;
  const fs::path out = kWork / "thm24.json";
  const auto run = cli_run({"fuzz", "--ineq", "thm-2.4", "--class", "normal_order_constrained", "--dims", "2,3,5,8",
                            "--trials", "1000", "--seed", "42", "--out", out.string()});
  o.require(run.code == 0 || run.code == 1, "fuzz exit code " + std::to_string(run.code));
  const Json file = Json::parse(slurp(out));
  const Json& t = file.at("result").at("targets").at(0);
  o.note("trials " + t.at("trials").dump() + ", holds " + t.at("holds").dump() + ", violated " +
         t.at("violated").dump() + ", hypothesis_violated " + t.at("hypothesis_violated").dump() +
         ", min margin " + t.at("min_margin").dump());
  if (t.at("violated") != 0) {
    o.note("FINDING: violations reported");
    const auto rerun = cli_run({"replay", out.string()});
    o.require(rerun.code == 1 && rerun.out.find("(identical)") != std::string::npos, "witness replays identically");
  }
  return o;
}

Outcome determinism(const Json& first) {
  Outcome o;
  const fs::path out = kWork / "theorems_again.json";
  const auto run = cli_run(theorem_fuzz_args(out));
  o.require(run.code == 0, "second run exit code");
  const std::string a = slurp(kWork / "theorems.json");
  const std::string b = slurp(out);
  o.require(!a.empty() && a == b, "ReportFiles byte-identical");
  o.require(dump(first) == a, "first report re-serializes unchanged");
  o.note(std::to_string(a.size()) + " bytes identical");
  return o;
}

}  // namespace

int main() {
  fs::create_directories(kWork);
  int failures = 0;
  const auto report = [&](int id, const char* title, double limit_s, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0) o.require(secs < limit_s, "runtime " + num(secs) + " s over " + num(limit_s) + " s");
    failures += !o.pass;
    std::printf("%s criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
  };

  Json campaign;
  report(1, "repro ex-2.3", 1.0, example_2_3);
  report(2, "repro ex-2.2", 1.0, example_2_2);
  report(3, "campaigns over the true statements, seed 42, dims {2,3,5,8}, 1000 trials", 60.0, [&] { return theorem_suites(campaign); });
  report(4, "thm-2.7 left side is an identity", 0, [&] { return thm_2_7_sharpness(campaign); });
  report(5, "counterexample searches", 120.0, searches);
  report(6, "eigensolver accuracy", 30.0, eigensolver);
  report(7, "thm-2.4 campaign on normal_order_constrained", 0, thm_2_4_campaign);
  report(8, "campaign ReportFiles are byte-identical", 0, [&] { return determinism(campaign); });
  return failures == 0 ? 0 : 1;
}
