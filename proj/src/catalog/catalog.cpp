#include "optbench/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "registry.hpp"

namespace optbench {

namespace {

bool label_matches(const std::optional<bool>& want, Label have) {
  if (!want) return true;
  return have == (*want ? Label::yes : Label::no);
}

}  // namespace

bool ListFilter::matches(const FunctionMeta& m) const {
  const PropertySet& p = m.properties;
  if (tier && m.tier != *tier) return false;
  if (modality && p.modality != *modality) return false;
  if (!label_matches(continuous, p.continuous)) return false;
  if (!label_matches(differentiable, p.differentiable)) return false;
  if (!label_matches(separable, p.separable)) return false;
  if (!label_matches(scalable, p.scalable)) return false;
  if (stochastic && p.stochastic != *stochastic) return false;
  if (dynamic && p.dynamic != *dynamic) return false;
  if (dim_kind && m.dim_class.kind != *dim_kind) return false;
  if (dimension && !m.dim_class.accepts(*dimension)) return false;
  return true;
}

Catalog::Catalog() {
  detail::Registry r;
  detail::register_constants(r);
  detail::register_group_1(r);
  detail::register_group_2(r);
  detail::register_group_3(r);
  detail::register_group_4(r);

  entries_ = std::move(r.entries());
  tables_ = std::move(r.tables());
  std::sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.meta.id.canonical_name < b.meta.id.canonical_name;
  });

  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const FunctionId& id = entries_[i].meta.id;
    if (!index_.emplace(id.canonical_name, i).second) {
      throw std::logic_error("duplicate catalog name: " + id.canonical_name);
    }
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (const std::string& alias : entries_[i].meta.id.aliases) {
      if (!index_.emplace(alias, i).second) {
        throw std::logic_error("alias collides with another name: " + alias);
      }
    }
  }
}

const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::lookup(std::string_view name) const {
  if (const CatalogEntry* e = find(name)) return *e;
  raise(ErrorCode::UnknownFunction, "unknown function: " + std::string(name));
}

const ConstantTable& Catalog::table(std::string_view name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) {
    raise(ErrorCode::UnknownFunction, "unknown constant table: " + std::string(name));
  }
  return it->second;
}

std::vector<FunctionId> Catalog::list(const ListFilter& filter) const {
  return list([&](const FunctionMeta& m) { return filter.matches(m); });
}

std::vector<FunctionId> Catalog::list(
    const std::function<bool(const FunctionMeta&)>& pred) const {
  std::vector<FunctionId> out;
  for (const CatalogEntry& e : entries_) {
    if (pred(e.meta)) out.push_back(e.meta.id);
  }
  return out;
}

CatalogStats Catalog::stats() const {
  CatalogStats s;
  s.total = entries_.size();
  for (const CatalogEntry& e : entries_) {
    const PropertySet& p = e.meta.properties;
    ++s.per_tier[e.meta.tier];
    ++s.per_property["continuous"][std::string(to_string(p.continuous))];
    ++s.per_property["differentiable"][std::string(to_string(p.differentiable))];
    ++s.per_property["separable"][std::string(to_string(p.separable))];
    ++s.per_property["scalable"][std::string(to_string(p.scalable))];
    ++s.per_property["modality"][std::string(to_string(p.modality))];
    ++s.per_property["stochastic"][p.stochastic ? "yes" : "no"];
    ++s.per_property["dynamic"][p.dynamic ? "yes" : "no"];
  }
  return s;
}

std::vector<std::string> Catalog::free_symbols() const {
  std::vector<std::string> out;
  for (const CatalogEntry& e : entries_) {
    if (e.meta.tier == 3) continue;
    std::set<std::string, std::less<>> known;
    for (const Param& p : e.params) known.insert(p.name);
    for (const std::string& c : e.meta.constants) {
      if (tables_.count(c)) known.insert(c);
      else out.push_back(e.meta.id.canonical_name + ":" + c);
    }
    for (const std::string& sym : e.symbols) {
      if (!known.count(sym)) out.push_back(e.meta.id.canonical_name + ":" + sym);
    }
  }
  return out;
}

const std::vector<std::string>& Catalog::tier1_names() {
  static const std::vector<std::string> names = {
      "ackley",          "alpine-n1",       "beale",
      "booth",           "camel-three-hump", "complex-dynamic-deceptive-basin",
      "cross-in-tray",   "dixon-price",     "drop-wave",
      "dynamic-deceptive-basin", "easom",   "goldstein-price",
      "griewank",        "himmelblau",      "holder-table",
      "levy-n13",        "matyas",          "michalewicz",
      "rastrigin",       "rosenbrock",      "salomon",
      "schaffer-f6",     "schaffer-n2",     "schwefel",
      "sphere",          "styblinski-tang", "zakharov"};
  return names;
}

std::vector<std::string> Catalog::top25_names() {
  std::vector<std::string> out;
  for (const std::string& n : tier1_names()) {
    if (!catalog().lookup(n).meta.properties.dynamic) out.push_back(n);
  }
  return out;
}

const CatalogEntry& lookup(std::string_view name) { return catalog().lookup(name); }
std::vector<FunctionId> list(const ListFilter& filter) { return catalog().list(filter); }
CatalogStats catalog_stats() { return catalog().stats(); }

}  // namespace optbench
