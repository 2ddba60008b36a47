#include "svineq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "svineq/error.hpp"
#include "svineq/fixtures.hpp"
#include "svineq/fuzzer.hpp"
#include "svineq/serialize.hpp"

namespace svineq::cli {

namespace {

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kHolds;
    case Verdict::Violated: return kViolated;
    case Verdict::HypothesisViolated: return kHypothesisViolated;
  }
  return kUsageError;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
  file << text;
  if (!file) throw Error(ErrorKind::MalformedInput, "failed writing " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
}

struct Options {
  // verify
  std::string ineq;
  std::vector<std::string> files;
  // repro
  std::string fixture;
  bool json_only = false;
  // fuzz
  std::string ineqs;
  std::string class_tag;
  std::string dims = "2..5";
  std::size_t trials = 100;
  unsigned threads = 0;
  // search
  std::string target;
  std::size_t budget = 10000;
  std::size_t perturb_steps = 64;
  // replay
  std::string replay_file;
  // shared
  std::uint64_t seed = 0;
  double tol_abs = Tolerance{}.abs;
  double tol_rel = Tolerance{}.rel;
  std::string out_path;
};

Tolerance tolerance_of(const Options& o) {
  Tolerance tol{o.tol_abs, o.tol_rel};
  if (!tol.valid()) throw Error(ErrorKind::ConfigInvalid, "tolerances must be finite and >= 0");
  return tol;
}

void add_tol_flags(CLI::App* sub, Options& o) {
  sub->add_option("--tol-abs", o.tol_abs, "Absolute tolerance")->capture_default_str();
  sub->add_option("--tol-rel", o.tol_rel, "Relative tolerance")->capture_default_str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto id = parse_inequality_id(o.ineq);
  if (!id) throw Error(ErrorKind::ConfigInvalid, "unknown inequality \"" + o.ineq + "\"");
  Witness w;
  w.id = *id;
  w.tol = tolerance_of(o);
  for (const auto& f : o.files) w.inputs.push_back(read_matrix_file(f));
  w.report = check(*id, w.inputs, w.tol);
  w.origin = "verify";
  for (const auto& f : o.files) w.origin += " " + f;
  const Json config = {{"ineq", o.ineq}, {"files", o.files}, {"tolerance", tolerance_to_json(w.tol)}};
  write_output(o.out_path, dump(make_report_file("verify", config, witness_to_json(w))), out);
  return exit_for(w.report.verdict);
}

int cmd_repro(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  ReproResult r;
  if (o.fixture == "ex-2.2") {
    r = repro_example_2_2(tol);
  } else if (o.fixture == "ex-2.3") {
    r = repro_example_2_3(tol);
  } else {
    throw Error(ErrorKind::ConfigInvalid, "unknown fixture \"" + o.fixture + "\" (ex-2.2 | ex-2.3)");
  }
  const Json config = {{"fixture", o.fixture}, {"tolerance", tolerance_to_json(tol)}};
  const std::string json = dump(make_report_file("repro", config, repro_to_json(r)));
  if (!o.out_path.empty()) write_output(o.out_path, json, out);
  if (!o.json_only) out << repro_to_text(r);
  if (o.out_path.empty()) out << (o.json_only ? "" : "\n") << json;
  return kHolds;
}

CampaignConfig campaign_config(const Options& o) {
  CampaignConfig c;
  c.dims = parse_dims(o.dims);
  c.trials_per_dim = o.trials;
  c.seed = o.seed;
  c.tol = tolerance_of(o);

  std::optional<GeneratorClass> klass;
  if (!o.class_tag.empty()) {
    klass = parse_generator_class(o.class_tag);
    if (!klass) throw Error(ErrorKind::ConfigInvalid, "unknown class \"" + o.class_tag + "\"");
  }
  if (o.ineqs == "all") {
    if (klass) throw Error(ErrorKind::ConfigInvalid, "--ineq all uses each checker's canonical class; drop --class");
    for (InequalityId id : all_inequalities()) c.targets.push_back(canonical_target(id));
  } else {
    std::stringstream ss(o.ineqs);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto id = parse_inequality_id(name);
      if (!id) throw Error(ErrorKind::ConfigInvalid, "unknown inequality \"" + name + "\"");
      CampaignTarget t = canonical_target(*id);
      if (klass) t.class_tag = *klass;
      c.targets.push_back(t);
    }
  }
  validate(c);
  return c;
}

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
  const CampaignConfig config = campaign_config(o);
  const CampaignResult result = run_campaign(config, o.threads);
  const std::string json = dump(make_report_file("campaign", config_to_json(config), campaign_to_json(result)));
  write_output(o.out_path, json, out);
  for (const auto& t : result.targets) {
    err << to_string(t.target.id) << " x " << to_string(t.target.class_tag) << ": " << t.trials << " trials, "
        << t.holds << " holds, " << t.violated << " violated, " << t.hypothesis_violated << " hypothesis-violated";
    if (t.min_margin) err << ", min margin " << *t.min_margin;
    if (t.violated > 0 && !expected_to_hold(t.target.id)) err << " (not expected to hold)";
    err << "\n";
  }
  return result.passes() ? kHolds : kViolated;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto id = parse_search_target(o.target);
  if (!id) throw Error(ErrorKind::ConfigInvalid, "unknown search target \"" + o.target + "\"");
  SearchTarget target{*id, o.budget, o.perturb_steps, tolerance_of(o)};
  const SearchOutcome outcome = search_counterexample(target, o.seed);
  const Json config = {{"target", o.target},
                       {"budget", o.budget},
                       {"perturb_steps", o.perturb_steps},
                       {"seed", o.seed},
                       {"tolerance", tolerance_to_json(target.tol)}};
  if (!outcome.witness) {
    out << "exhausted: no witness for " << o.target << " after " << outcome.evaluations << " evaluations\n";
    return kExhausted;
  }
  const Witness& w = *outcome.witness;
  const InequalityReport fresh = replay(w);
  if (!replay_matches(w, fresh)) throw Error(ErrorKind::MalformedWitness, "witness does not replay");
  write_output(o.out_path, dump(make_report_file("witness", config, witness_to_json(w))), out);
  err << "witness for " << o.target << " after " << outcome.evaluations << " evaluations, min margin "
      << w.report.min_margin << " (tol " << w.report.tol_used << ")\n";
  return kHolds;
}

// Replays every stored witness; the exit code is the worst replayed verdict.
int cmd_replay(const Options& o, std::ostream& out) {
  const Json file = read_json_file(o.replay_file);
  const Json& kind = file.contains("kind") ? file.at("kind") : Json();
  if (!kind.is_string()) throw Error(ErrorKind::MalformedInput, "not a report file");
  const std::string k = kind.get<std::string>();

  std::vector<Witness> witnesses;
  if (k == "verify" || k == "witness") {
    witnesses.push_back(witness_from_json(check_report_file(file, k).at("result")));
  } else if (k == "campaign") {
    const CampaignResult r = campaign_from_json(check_report_file(file, k).at("result"));
    for (const auto& t : r.targets) {
      if (t.worst_witness) witnesses.push_back(*t.worst_witness);
    }
  } else {
    throw Error(ErrorKind::MalformedInput, "cannot replay a \"" + k + "\" report");
  }

  int code = kHolds;
  for (const Witness& w : witnesses) {
    const InequalityReport fresh = replay(w);
    const bool same = replay_matches(w, fresh);
    out << to_string(w.id) << ": stored " << to_string(w.report.verdict) << " replayed " << to_string(fresh.verdict)
        << " min margin " << fresh.min_margin << (same ? " (identical)" : " (MISMATCH)") << "\n";
    if (!same) throw Error(ErrorKind::MalformedWitness, "replay differs from the stored report");
    code = std::max(code, exit_for(fresh.verdict));
  }
  return code;
}

}  // namespace

std::vector<std::size_t> parse_dims(const std::string& spec) {
  std::vector<std::size_t> dims;
  std::stringstream ss(spec);
  std::string part;
  const auto to_dim = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ConfigInvalid, "bad dimension \"" + s + "\" in \"" + spec + "\"");
    }
    const unsigned long v = std::stoul(s);
    if (v < 1 || v > kMaxInputDim) throw Error(ErrorKind::ConfigInvalid, "dimension " + s + " outside [1, 64]");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      dims.push_back(to_dim(part));
      continue;
    }
    const std::size_t lo = to_dim(part.substr(0, dots));
    const std::size_t hi = to_dim(part.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::ConfigInvalid, "empty range \"" + part + "\"");
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
  }
  if (dims.empty()) throw Error(ErrorKind::ConfigInvalid, "no dimensions given");
  return dims;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular value inequality verifier for complex matrices", "svineq"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Check one inequality on matrices read from JSON files");
  verify->add_option("ineq", o.ineq, "Inequality id")->required();
  verify->add_option("files", o.files, "MatrixFile inputs")->required();
  verify->add_option("--out", o.out_path, "Write the report here instead of stdout");
  add_tol_flags(verify, o);

  auto* repro = app.add_subcommand("repro", "Recompute an embedded worked example");
  repro->add_option("fixture", o.fixture, "ex-2.2 | ex-2.3")->required();
  repro->add_flag("--json", o.json_only, "Print only the JSON report");
  repro->add_option("--out", o.out_path, "Write the JSON report here");
  add_tol_flags(repro, o);

  auto* fuzz = app.add_subcommand("fuzz", "Run a randomized campaign");
  fuzz->add_option("--ineq", o.ineqs, "Comma-separated inequality ids, or 'all'")->required();
  fuzz->add_option("--class", o.class_tag, "Generator class (default: canonical per inequality)");
  fuzz->add_option("--dims", o.dims, "Dimensions, e.g. 2..6 or 2,3,5,8")->capture_default_str();
  fuzz->add_option("--trials", o.trials, "Trials per dimension per target")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "Campaign seed")->capture_default_str();
  fuzz->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  fuzz->add_option("--out", o.out_path, "Write the campaign report here instead of stdout");
  add_tol_flags(fuzz, o);

  auto* search = app.add_subcommand("search", "Search for a counterexample");
  search->add_option("--target", o.target, "bk-1.1-hermitian-B | thm-2.1-nonnormal | loewner-cartesian-general")
      ->required();
  search->add_option("--budget", o.budget, "Checker evaluations")->capture_default_str();
  search->add_option("--perturb-steps", o.perturb_steps, "Perturbation steps per restart")->capture_default_str();
  search->add_option("--seed", o.seed, "Search seed")->capture_default_str();
  search->add_option("--out", o.out_path, "Write the witness here instead of stdout");
  add_tol_flags(search, o);

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the checker on a stored verify/witness/campaign report");
  replay_cmd->add_option("file", o.replay_file, "Report file")->required();

  std::vector<const char*> argv{"svineq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (repro->parsed()) return cmd_repro(o, out);
    if (fuzz->parsed()) return cmd_fuzz(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (replay_cmd->parsed()) return cmd_replay(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace svineq::cli
