#include "registry.hpp"

#include <sstream>
#include <stdexcept>

namespace optbench::detail {

void Registry::add(Def def) {
  if (def.tier == 3 && def.tier_reason.empty()) {
    throw std::logic_error("tier 3 entry without reason: " + def.name);
  }
  if (def.tier != 3 && !def.body) throw std::logic_error("entry without body: " + def.name);

  CatalogEntry e;
  FunctionMeta& m = e.meta;
  m.id.canonical_name = std::move(def.name);
  m.id.aliases = std::move(def.aliases);
  m.equation = def.eq;
  m.title = std::move(def.title);
  m.properties = parse_props(def.props);
  m.default_bounds = std::move(def.bounds);
  m.alternative_bounds = std::move(def.alt);
  m.dim_class = def.dim;
  m.optima = std::move(def.optima);
  m.tier = def.tier;
  m.tier_reason = std::move(def.tier_reason);
  m.constants = std::move(def.constants);
  m.discrepancy_notes = std::move(def.notes);
  m.simplified_transforms = def.simplified;
  if (def.tier != 3) e.body = std::move(def.body);
  e.make_state = std::move(def.state);
  e.params = std::move(def.params);
  e.symbols = std::move(def.symbols);
  entries_.push_back(std::move(e));
}

void Registry::table(std::string name, std::size_t rows, std::size_t cols, Vec data) {
  if (rows * cols != data.size()) throw std::logic_error("table shape mismatch: " + name);
  ConstantTable t{name, rows, cols, std::move(data)};
  tables_.emplace(std::move(name), std::move(t));
}

const ConstantTable& Registry::get(std::string_view name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) throw std::logic_error("unknown table: " + std::string(name));
  return it->second;
}

PropertySet parse_props(const std::string& text) {
  PropertySet p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "C") p.continuous = Label::yes;
    else if (tok == "NC") p.continuous = Label::no;
    else if (tok == "D") p.differentiable = Label::yes;
    else if (tok == "ND") p.differentiable = Label::no;
    else if (tok == "S") p.separable = Label::yes;
    else if (tok == "NS") p.separable = Label::no;
    else if (tok == "Sc") p.scalable = Label::yes;
    else if (tok == "NSc") p.scalable = Label::no;
    else if (tok == "U") p.modality = Modality::unimodal;
    else if (tok == "M") p.modality = Modality::multimodal;
    else if (tok == "stoch") p.stochastic = true;
    else if (tok == "dyn") p.dynamic = p.stochastic = true;
    else throw std::logic_error("unknown property token: " + tok);
  }
  return p;
}

void domain_error(const std::string& entry, const std::string& what) {
  raise(ErrorCode::DomainError, entry + ": " + what);
}

double real_pow(const char* entry, double base, double exponent) {
  if (base < 0.0 && exponent != std::floor(exponent)) {
    domain_error(entry, "negative base with non-integer exponent");
  }
  if (base == 0.0 && exponent < 0.0) domain_error(entry, "zero base with negative exponent");
  return std::pow(base, exponent);
}

double call_entry(std::string_view name, std::span<const double> x) {
  const CatalogEntry& e = catalog().lookup(name);
  Vec params;
  for (const Param& p : e.params) params.push_back(p.value);
  return e.body(EvalArgs{x, params, nullptr});
}

}  // namespace optbench::detail
