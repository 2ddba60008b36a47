#include "svineq/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "svineq/error.hpp"

namespace svineq {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " is not a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) malformed(std::string(what) + " is not finite");
  return v;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

template <typename T, typename Parse>
T parse_enum(const Json& j, Parse parse, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " is not a string");
  const auto v = parse(j.get<std::string>());
  if (!v) malformed(std::string("unknown ") + what + " \"" + j.get<std::string>() + "\"");
  return *v;
}

Json histogram_to_json(const MarginHistogram& h) {
  Json bins = Json::array();
  for (std::size_t b = 1; b <= MarginHistogram::kBins; ++b) {
    bins.push_back({{"lower", MarginHistogram::bin_lower_edge(b)}, {"count", h.counts[b]}});
  }
  return {{"underflow", h.counts[0]},
          {"overflow", h.counts[MarginHistogram::kBins + 1]},
          {"range", {MarginHistogram::kLow, MarginHistogram::kHigh}},
          {"bins", bins}};
}

MarginHistogram histogram_from_json(const Json& j) {
  MarginHistogram h;
  h.counts[0] = field(j, "underflow").get<std::uint64_t>();
  h.counts[MarginHistogram::kBins + 1] = field(j, "overflow").get<std::uint64_t>();
  const Json& bins = field(j, "bins");
  if (!bins.is_array() || bins.size() != MarginHistogram::kBins) malformed("histogram needs 32 bins");
  for (std::size_t b = 0; b < MarginHistogram::kBins; ++b) h.counts[b + 1] = field(bins[b], "count").get<std::uint64_t>();
  return h;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (const Complex& z : m.row(i)) row.push_back({z.real() + 0.0, z.imag() + 0.0});
    rows.push_back(std::move(row));
  }
  return {{"n", m.dim()}, {"entries", rows}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) malformed("\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());
  if (n > kMaxInputDim) malformed("n = " + std::to_string(n) + " exceeds 64");
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != n) malformed("\"entries\" must hold n rows");
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("ragged row in \"entries\"");
    for (const Json& pair : row) {
      if (!pair.is_array() || pair.size() != 2) malformed("entry must be a [re, im] pair");
      data.emplace_back(number(pair[0], "real part"), number(pair[1], "imaginary part"));
    }
  }
  return ComplexMatrix(n, std::move(data));
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    malformed(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

Json tolerance_to_json(const Tolerance& tol) { return {{"tol_abs", tol.abs}, {"tol_rel", tol.rel}}; }

Tolerance tolerance_from_json(const Json& j) {
  Tolerance t{number(field(j, "tol_abs"), "tol_abs"), number(field(j, "tol_rel"), "tol_rel")};
  if (!t.valid()) malformed("negative tolerance");
  return t;
}

Json report_to_json(const InequalityReport& r) {
  Json sides = Json::array();
  for (const auto& s : r.sides) {
    Json idx = Json::array();
    for (const auto& m : s.per_index) idx.push_back({{"j", m.j}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin}});
    sides.push_back({{"name", s.name}, {"min_margin", s.min_margin}, {"scale", s.scale}, {"per_index", idx}});
  }
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"name", h.name}, {"value", h.value}, {"limit", h.limit}, {"satisfied", h.satisfied}});
  }
  return {{"id", to_string(r.id)},       {"dims", r.dims},          {"sides", sides},
          {"min_margin", r.min_margin},  {"verdict", to_string(r.verdict)}, {"tol_used", r.tol_used},
          {"hypothesis_residuals", hyps}, {"notes", r.notes}};
}

InequalityReport report_from_json(const Json& j) {
  try {
    InequalityReport r;
    r.id = parse_enum<InequalityId>(field(j, "id"), parse_inequality_id, "inequality id");
    r.dims = field(j, "dims").get<std::vector<std::size_t>>();
    for (const Json& s : field(j, "sides")) {
      SideReport side;
      side.name = field(s, "name").get<std::string>();
      side.min_margin = number(field(s, "min_margin"), "min_margin");
      side.scale = number(field(s, "scale"), "scale");
      for (const Json& m : field(s, "per_index")) {
        side.per_index.push_back({field(m, "j").get<std::size_t>(), number(field(m, "lhs"), "lhs"),
                                  number(field(m, "rhs"), "rhs"), number(field(m, "margin"), "margin")});
      }
      r.sides.push_back(std::move(side));
    }
    r.min_margin = number(field(j, "min_margin"), "min_margin");
    r.verdict = parse_enum<Verdict>(field(j, "verdict"), parse_verdict, "verdict");
    r.tol_used = number(field(j, "tol_used"), "tol_used");
    for (const Json& h : field(j, "hypothesis_residuals")) {
      r.hypotheses.push_back({field(h, "name").get<std::string>(), number(field(h, "value"), "value"),
                              number(field(h, "limit"), "limit"), field(h, "satisfied").get<bool>()});
    }
    r.notes = field(j, "notes").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    malformed(std::string("report: ") + e.what());
  }
}

Json witness_to_json(const Witness& w) {
  Json inputs = Json::array();
  for (const auto& m : w.inputs) inputs.push_back(matrix_to_json(m));
  return {{"id", to_string(w.id)},
          {"inputs", inputs},
          {"tolerance", tolerance_to_json(w.tol)},
          {"report", report_to_json(w.report)},
          {"origin", w.origin}};
}

Witness witness_from_json(const Json& j) {
  try {
    Witness w;
    w.id = parse_enum<InequalityId>(field(j, "id"), parse_inequality_id, "inequality id");
    for (const Json& m : field(j, "inputs")) w.inputs.push_back(matrix_from_json(m));
    w.tol = tolerance_from_json(field(j, "tolerance"));
    w.report = report_from_json(field(j, "report"));
    w.origin = field(j, "origin").get<std::string>();
    return w;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedWitness, e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedWitness, e.what());
  }
}

Json config_to_json(const CampaignConfig& c) {
  Json targets = Json::array();
  for (const auto& t : c.targets) targets.push_back({{"ineq", to_string(t.id)}, {"class", to_string(t.class_tag)}});
  return {{"targets", targets},
          {"dims", c.dims},
          {"trials_per_dim", c.trials_per_dim},
          {"seed", c.seed},
          {"tolerance", tolerance_to_json(c.tol)}};
}

CampaignConfig config_from_json(const Json& j) {
  try {
    CampaignConfig c;
    for (const Json& t : field(j, "targets")) {
      c.targets.push_back({parse_enum<InequalityId>(field(t, "ineq"), parse_inequality_id, "inequality id"),
                           parse_enum<GeneratorClass>(field(t, "class"), parse_generator_class, "class")});
    }
    c.dims = field(j, "dims").get<std::vector<std::size_t>>();
    c.trials_per_dim = field(j, "trials_per_dim").get<std::size_t>();
    c.seed = field(j, "seed").get<std::uint64_t>();
    c.tol = tolerance_from_json(field(j, "tolerance"));
    return c;
  } catch (const Json::exception& e) {
    malformed(std::string("config: ") + e.what());
  }
}

Json campaign_to_json(const CampaignResult& r) {
  Json targets = Json::array();
  for (const auto& t : r.targets) {
    Json sides = Json::array();
    for (const auto& s : t.sides) {
      sides.push_back({{"name", s.name},
                       {"min_margin", s.min_margin},
                       {"max_abs_margin", s.max_abs_margin},
                       {"max_rel_abs_margin", s.max_rel_abs_margin}});
    }
    targets.push_back({{"ineq", to_string(t.target.id)},
                       {"class", to_string(t.target.class_tag)},
                       {"expected_to_hold", expected_to_hold(t.target.id)},
                       {"trials", t.trials},
                       {"holds", t.holds},
                       {"violated", t.violated},
                       {"hypothesis_violated", t.hypothesis_violated},
                       {"min_margin", optional_number(t.min_margin)},
                       {"histogram", histogram_to_json(t.histogram)},
                       {"sides", sides},
                       {"worst_witness", t.worst_witness ? witness_to_json(*t.worst_witness) : Json(nullptr)}});
  }
  return {{"config", config_to_json(r.config)}, {"targets", targets}, {"passes", r.passes()}};
}

CampaignResult campaign_from_json(const Json& j) {
  try {
    CampaignResult r;
    r.config = config_from_json(field(j, "config"));
    for (const Json& t : field(j, "targets")) {
      TargetResult tr;
      tr.target = {parse_enum<InequalityId>(field(t, "ineq"), parse_inequality_id, "inequality id"),
                   parse_enum<GeneratorClass>(field(t, "class"), parse_generator_class, "class")};
      tr.trials = field(t, "trials").get<std::uint64_t>();
      tr.holds = field(t, "holds").get<std::uint64_t>();
      tr.violated = field(t, "violated").get<std::uint64_t>();
      tr.hypothesis_violated = field(t, "hypothesis_violated").get<std::uint64_t>();
      const Json& mm = field(t, "min_margin");
      if (!mm.is_null()) tr.min_margin = number(mm, "min_margin");
      tr.histogram = histogram_from_json(field(t, "histogram"));
      for (const Json& s : field(t, "sides")) {
        tr.sides.push_back({field(s, "name").get<std::string>(), number(field(s, "min_margin"), "min_margin"),
                            number(field(s, "max_abs_margin"), "max_abs_margin"),
                            number(field(s, "max_rel_abs_margin"), "max_rel_abs_margin")});
      }
      const Json& w = field(t, "worst_witness");
      if (!w.is_null()) tr.worst_witness = witness_from_json(w);
      r.targets.push_back(std::move(tr));
    }
    return r;
  } catch (const Json::exception& e) {
    malformed(std::string("campaign: ") + e.what());
  }
}

Json make_report_file(std::string_view kind, Json config, Json payload) {
  return {{"schema", kSchemaVersion},
          {"tool", kToolName},
          {"version", kToolVersion},
          {"kind", kind},
          {"config", std::move(config)},
          {"result", std::move(payload)}};
}

const Json& check_report_file(const Json& file, std::string_view kind) {
  const Json& schema = field(file, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) malformed("unsupported schema version");
  const Json& k = field(file, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) malformed("expected a \"" + std::string(kind) + "\" report");
  field(file, "result");
  return file;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace svineq
