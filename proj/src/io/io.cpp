#include "optbench/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace optbench {

namespace {

template <class E>
E parse_enum(const std::string& s, std::initializer_list<std::pair<const char*, E>> table,
             const char* what) {
  for (const auto& [name, value] : table) {
    if (s == name) return value;
  }
  raise(ErrorCode::ParseError, std::string("bad ") + what + ": " + s);
}

Label parse_label(const std::string& s) {
  return parse_enum<Label>(s, {{"no", Label::no}, {"yes", Label::yes}, {"unknown", Label::unknown}},
                           "label");
}

Modality parse_modality(const std::string& s) {
  return parse_enum<Modality>(s,
                              {{"unimodal", Modality::unimodal},
                               {"multimodal", Modality::multimodal},
                               {"unknown", Modality::unknown}},
                              "modality");
}

Provenance parse_provenance(const std::string& s) {
  return parse_enum<Provenance>(s,
                                {{"paper-claimed", Provenance::paper_claimed},
                                 {"verified", Provenance::verified},
                                 {"both", Provenance::both}},
                                "provenance");
}

std::string str(std::string_view v) { return std::string(v); }

Json bounds_json(const BoundsTemplate& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"dim_power", b.dim_power}};
}

BoundsTemplate bounds_from(const Json& j) {
  BoundsTemplate b;
  b.lower = j.at("lower").get<Vec>();
  b.upper = j.at("upper").get<Vec>();
  b.dim_power = j.at("dim_power").get<int>();
  return b;
}

Json optimum_json(const OptimumRecord& r) {
  return {{"location", r.location},   {"all_equal", r.all_equal},
          {"value", r.value},         {"value_per_dim", r.value_per_dim},
          {"provenance", str(to_string(r.provenance))},
          {"dimension", r.dimension}, {"tol", r.tol}};
}

OptimumRecord optimum_from(const Json& j) {
  OptimumRecord r;
  r.location = j.at("location").get<Vec>();
  r.all_equal = j.at("all_equal").get<bool>();
  r.value = j.at("value").get<double>();
  r.value_per_dim = j.at("value_per_dim").get<double>();
  r.provenance = parse_provenance(j.at("provenance").get<std::string>());
  r.dimension = j.at("dimension").get<std::size_t>();
  r.tol = j.at("tol").get<double>();
  return r;
}

// NaN and infinities have no JSON literal; they become null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json vec(const Vec& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void spec_error(std::size_t line, const std::string& msg) {
  raise(ErrorCode::ParseError, "run spec line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) spec_error(line, "not a non-negative integer: " + s);
  return v;
}

double parse_double(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    spec_error(line, "not a finite number: " + s);
  }
  return v;
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  spec_error(line, "expected true or false: " + s);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json to_json(const FunctionMeta& m) {
  const PropertySet& p = m.properties;
  Json alt = Json::array();
  for (const auto& b : m.alternative_bounds) alt.push_back(bounds_json(b));
  Json optima = Json::array();
  for (const auto& r : m.optima) optima.push_back(optimum_json(r));
  return {
      {"name", m.id.canonical_name},
      {"aliases", m.id.aliases},
      {"equation", m.equation},
      {"title", m.title},
      {"properties",
       {{"continuous", str(to_string(p.continuous))},
        {"differentiable", str(to_string(p.differentiable))},
        {"separable", str(to_string(p.separable))},
        {"scalable", str(to_string(p.scalable))},
        {"modality", str(to_string(p.modality))},
        {"stochastic", p.stochastic},
        {"dynamic", p.dynamic}}},
      {"default_bounds", bounds_json(m.default_bounds)},
      {"alternative_bounds", alt},
      {"dim_class",
       {{"kind", m.dim_class.kind == DimClass::Kind::fixed ? "fixed" : "scalable"},
        {"n", m.dim_class.n},
        {"step", m.dim_class.step}}},
      {"optima", optima},
      {"tier", m.tier},
      {"tier_reason", m.tier_reason},
      {"constants", m.constants},
      {"discrepancy_notes", m.discrepancy_notes},
      {"simplified_transforms", m.simplified_transforms},
  };
}

FunctionMeta meta_from_json(const Json& j) {
  try {
    FunctionMeta m;
    m.id.canonical_name = j.at("name").get<std::string>();
    m.id.aliases = j.at("aliases").get<std::vector<std::string>>();
    m.equation = j.at("equation").get<int>();
    m.title = j.at("title").get<std::string>();
    const Json& p = j.at("properties");
    m.properties.continuous = parse_label(p.at("continuous").get<std::string>());
    m.properties.differentiable = parse_label(p.at("differentiable").get<std::string>());
    m.properties.separable = parse_label(p.at("separable").get<std::string>());
    m.properties.scalable = parse_label(p.at("scalable").get<std::string>());
    m.properties.modality = parse_modality(p.at("modality").get<std::string>());
    m.properties.stochastic = p.at("stochastic").get<bool>();
    m.properties.dynamic = p.at("dynamic").get<bool>();
    m.default_bounds = bounds_from(j.at("default_bounds"));
    for (const Json& b : j.at("alternative_bounds")) m.alternative_bounds.push_back(bounds_from(b));
    const Json& dc = j.at("dim_class");
    const std::string kind = dc.at("kind").get<std::string>();
    if (kind != "fixed" && kind != "scalable") raise(ErrorCode::ParseError, "bad dim_class kind: " + kind);
    m.dim_class.kind = kind == "fixed" ? DimClass::Kind::fixed : DimClass::Kind::scalable;
    m.dim_class.n = dc.at("n").get<std::size_t>();
    m.dim_class.step = dc.at("step").get<std::size_t>();
    for (const Json& r : j.at("optima")) m.optima.push_back(optimum_from(r));
    m.tier = j.at("tier").get<int>();
    m.tier_reason = j.at("tier_reason").get<std::string>();
    m.constants = j.at("constants").get<std::vector<std::string>>();
    m.discrepancy_notes = j.at("discrepancy_notes").get<std::vector<std::string>>();
    m.simplified_transforms = j.at("simplified_transforms").get<bool>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("bad metadata: ") + e.what());
  }
}

Json metadata_document(const std::vector<FunctionMeta>& metas) {
  Json fns = Json::array();
  for (const auto& m : metas) fns.push_back(to_json(m));
  return {{"format", "optbench-metadata"},
          {"version", kMetadataVersion},
          {"count", metas.size()},
          {"functions", fns}};
}

std::vector<FunctionMeta> read_metadata_document(const Json& doc) {
  try {
    if (doc.at("format") != "optbench-metadata" || doc.at("version") != kMetadataVersion) {
      raise(ErrorCode::ParseError, "not an optbench metadata document");
    }
    std::vector<FunctionMeta> out;
    for (const Json& f : doc.at("functions")) out.push_back(meta_from_json(f));
    if (out.size() != doc.at("count").get<std::size_t>()) {
      raise(ErrorCode::ParseError, "function count does not match");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("bad metadata: ") + e.what());
  }
}

Json catalog_metadata() {
  std::vector<FunctionMeta> metas;
  for (const auto& e : catalog().entries()) metas.push_back(e.meta);
  return metadata_document(metas);
}

Json to_json(const OptimizerConfig& c) {
  Json j = {{"kind", str(to_string(c.kind))}, {"budget", c.budget}};
  if (c.kind == OptimizerKind::nelder_mead) {
    j["nelder_mead"] = {{"reflection", c.nm.reflection},     {"expansion", c.nm.expansion},
                        {"contraction", c.nm.contraction},   {"shrink", c.nm.shrink},
                        {"initial_step", c.nm.initial_step}, {"min_diameter", c.nm.min_diameter}};
  }
  if (c.kind == OptimizerKind::differential_evolution) {
    j["de"] = {{"population", c.de.population},
               {"F", c.de.F},
               {"CR", c.de.CR},
               {"synchronous", c.de.synchronous}};
  }
  return j;
}

Json to_json(const OptRunResult& r, bool with_history) {
  Json j = {{"best_x", vec(r.best_x)},     {"best_f", num(r.best_f)},
            {"evals_used", r.evals_used},  {"seed", r.seed},
            {"wall_time", r.wall_time},    {"domain_errors", r.domain_errors}};
  if (with_history) {
    Json h = Json::array();
    for (const auto& p : r.history) h.push_back({p.eval, num(p.best_f)});
    j["history"] = h;
  }
  return j;
}

Json to_json(const ClaimStatus& s) {
  Json j = {{"claim", s.claim},
            {"verdict", str(to_string(s.verdict))},
            {"claimed_value", num(s.claimed_value)},
            {"value_at_claim", num(s.value_at_claim)},
            {"best_x", vec(s.best_x)},
            {"best_f", num(s.best_f)},
            {"gap", num(s.gap)},
            {"budget_used", s.budget_used},
            {"detail", s.detail},
            {"witness", nullptr},
            {"witness_f", nullptr}};
  if (s.record) {
    j["provenance"] = str(to_string(s.record->provenance));
    j["tol"] = s.record->tol;
    j["location"] = s.record->has_location() ? vec(s.record->location_at(s.best_x.size())) : Json(nullptr);
  }
  if (s.witness) {
    j["witness"] = vec(*s.witness);
    j["witness_f"] = num(s.witness_f);
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  Json j = {{"format", "optbench-verification"},
            {"version", kReportVersion},
            {"function", r.function},
            {"dim", r.dim},
            {"seed", r.seed},
            {"budget", r.budget},
            {"timestamp", r.timestamp},
            {"claims", claims},
            {"separability", nullptr},
            {"smoothness", nullptr},
            {"grid_minima", nullptr},
            {"skipped", r.skipped},
            {"findings", r.findings}};
  if (r.separability) {
    const auto& s = *r.separability;
    j["separability"] = {{"separable", s.separable},
                         {"max_mixed", num(s.max_mixed)},
                         {"max_abs_f", num(s.max_abs_f)},
                         {"threshold", num(s.threshold)},
                         {"pair", {s.i, s.j}},
                         {"witness", vec(s.witness)},
                         {"evaluations", s.evaluations},
                         {"label_check", r.separability_check}};
  }
  if (r.smoothness) {
    const auto& s = *r.smoothness;
    j["smoothness"] = {{"points", s.points},
                       {"nonfinite", s.nonfinite},
                       {"gradient_disagreements", s.gradient_disagreements},
                       {"max_relative_disagreement", num(s.max_relative_disagreement)},
                       {"nonfinite_witness", s.nonfinite_witness ? vec(*s.nonfinite_witness) : Json(nullptr)},
                       {"gradient_witness", s.gradient_witness ? vec(*s.gradient_witness) : Json(nullptr)},
                       {"continuity_flag", s.continuity_flag},
                       {"differentiability_flag", s.differentiability_flag}};
  }
  if (r.grid) {
    j["grid_minima"] = {{"resolution", r.grid->resolution},
                        {"minima", r.grid->minima},
                        {"modality_check", r.grid->modality_check}};
  }
  return j;
}

Json to_json(const SuiteTable& t, bool with_history) {
  Json runs = Json::array();
  for (const auto& run : t.runs) {
    Json j = {{"function", run.function}, {"dim", run.dim}, {"trial", run.trial}, {"seed", run.seed}};
    if (run.result) {
      j.update(to_json(*run.result, with_history));
    } else {
      j["error"] = run.error;
    }
    runs.push_back(j);
  }
  Json sums = Json::array();
  for (const auto& s : t.summaries) {
    Json j = {{"function", s.function}, {"dim", s.dim}, {"runs", s.runs}, {"failures", s.failures}};
    if (s.runs > 0) {
      j.update({{"mean", num(s.mean)},
                {"median", num(s.median)},
                {"best", num(s.best)},
                {"worst", num(s.worst)},
                {"mean_evals", s.mean_evals}});
    }
    sums.push_back(j);
  }
  return {{"runs", runs}, {"summaries", sums}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunSpec parse_run_spec(const std::string& text) {
  static const std::map<std::string, std::set<std::string>> known = {
      {"suite", {"optimizer", "budget", "functions", "dims", "trials", "seeds", "output", "history"}},
      {"de", {"population", "F", "CR", "synchronous"}},
      {"nelder-mead",
       {"reflection", "expansion", "contraction", "shrink", "initial_step", "min_diameter"}},
  };
  std::map<std::string, std::pair<std::string, std::size_t>> values;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find_first_of("#;")));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') spec_error(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!known.count(section)) spec_error(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) spec_error(line, "expected key = value");
    if (section.empty()) spec_error(line, "key outside any section");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!known.at(section).count(key)) spec_error(line, "unknown key '" + key + "' in [" + section + "]");
    const std::string full = section + "." + key;
    if (values.count(full)) spec_error(line, "duplicate key '" + key + "'");
    values[full] = {value, line};
  }

  RunSpec spec;
  auto get = [&](const std::string& k) -> const std::pair<std::string, std::size_t>* {
    const auto it = values.find(k);
    return it == values.end() ? nullptr : &it->second;
  };
  auto need = [&](const std::string& k) {
    const auto* v = get(k);
    if (!v) raise(ErrorCode::ParseError, "run spec: missing required key " + k);
    return *v;
  };

  const auto [opt, opt_line] = need("suite.optimizer");
  try {
    spec.config.kind = parse_optimizer(opt);
  } catch (const Error&) {
    spec_error(opt_line, "unknown optimizer " + opt);
  }
  {
    const auto [v, l] = need("suite.budget");
    spec.config.budget = parse_u64(v, l);
  }
  {
    const auto [v, l] = need("suite.functions");
    try {
      spec.functions = resolve_function_set(v);
    } catch (const Error& e) {
      spec_error(l, e.what());
    }
  }
  {
    const auto [v, l] = need("suite.dims");
    for (const auto& d : split_list(v)) spec.dims.push_back(parse_u64(d, l));
    if (spec.dims.empty()) spec_error(l, "dims is empty");
  }
  {
    const auto [v, l] = need("suite.seeds");
    for (const auto& s : split_list(v)) spec.seeds.push_back(parse_u64(s, l));
    if (spec.seeds.empty()) spec_error(l, "seeds is empty");
  }
  spec.trials = spec.seeds.size();
  if (const auto* v = get("suite.trials")) {
    spec.trials = parse_u64(v->first, v->second);
    if (spec.trials > spec.seeds.size()) spec_error(v->second, "fewer seeds than trials");
  }
  if (const auto* v = get("suite.output")) spec.output = v->first;
  if (const auto* v = get("suite.history")) spec.history = parse_bool(v->first, v->second);

  DeParams& de = spec.config.de;
  if (const auto* v = get("de.population")) de.population = parse_u64(v->first, v->second);
  if (const auto* v = get("de.F")) de.F = parse_double(v->first, v->second);
  if (const auto* v = get("de.CR")) de.CR = parse_double(v->first, v->second);
  if (const auto* v = get("de.synchronous")) de.synchronous = parse_bool(v->first, v->second);
  NelderMeadParams& nm = spec.config.nm;
  if (const auto* v = get("nelder-mead.reflection")) nm.reflection = parse_double(v->first, v->second);
  if (const auto* v = get("nelder-mead.expansion")) nm.expansion = parse_double(v->first, v->second);
  if (const auto* v = get("nelder-mead.contraction")) nm.contraction = parse_double(v->first, v->second);
  if (const auto* v = get("nelder-mead.shrink")) nm.shrink = parse_double(v->first, v->second);
  if (const auto* v = get("nelder-mead.initial_step")) nm.initial_step = parse_double(v->first, v->second);
  if (const auto* v = get("nelder-mead.min_diameter")) nm.min_diameter = parse_double(v->first, v->second);

  try {
    spec.config.validate();
  } catch (const Error& e) {
    raise(ErrorCode::ParseError, std::string("run spec: ") + e.what());
  }
  return spec;
}

std::vector<std::string> resolve_function_set(const std::string& text) {
  const std::string t = trim(text);
  if (t == "top25") return Catalog::top25_names();
  if (t == "tier1") return Catalog::tier1_names();
  std::vector<std::string> out;
  if (t == "all") {
    for (const auto& e : catalog().entries()) {
      if (e.evaluable()) out.push_back(e.meta.id.canonical_name);
    }
    return out;
  }
  for (const auto& name : split_list(t)) out.push_back(lookup(name).meta.id.canonical_name);
  return out;
}

}  // namespace optbench
