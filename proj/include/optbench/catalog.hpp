#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optbench/core.hpp"

namespace optbench {

// Published constant arrays (matrices and vectors) referenced by entries.
// Stored row-major with the printed shape.
struct ConstantTable {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double operator[](std::size_t i) const { return data[i]; }
  std::size_t size() const { return data.size(); }
};

struct Param {
  std::string name;
  double value;
};

using Body = std::function<double(const EvalArgs&)>;

using StateFactory =
    std::function<std::unique_ptr<StatefulBody>(std::size_t dim, std::uint64_t seed)>;

struct CatalogEntry {
  FunctionMeta meta;
  Body body;  // empty for tier 3
  StateFactory make_state;  // set for entries whose landscape drifts
  std::vector<Param> params;
  // Every scalar symbol of the printed equation other than coordinates of x;
  // each must resolve to a parameter or a constant table.
  std::vector<std::string> symbols;

  bool evaluable() const { return meta.tier != 3 && static_cast<bool>(body); }
};

struct ListFilter {
  std::optional<int> tier;
  std::optional<Modality> modality;
  std::optional<bool> continuous;
  std::optional<bool> differentiable;
  std::optional<bool> separable;
  std::optional<bool> scalable;
  std::optional<bool> stochastic;
  std::optional<bool> dynamic;
  std::optional<DimClass::Kind> dim_kind;
  // Entries usable at this dimension.
  std::optional<std::size_t> dimension;

  bool matches(const FunctionMeta& meta) const;
};

struct CatalogStats {
  std::size_t total = 0;
  std::map<int, std::size_t> per_tier;
  // property name -> label -> count, e.g. "separable" -> "yes" -> 41
  std::map<std::string, std::map<std::string, std::size_t>> per_property;
};

class Catalog {
 public:
  // Lookup by canonical name or alias; throws UnknownFunction.
  const CatalogEntry& lookup(std::string_view name) const;
  const CatalogEntry* find(std::string_view name) const;

  std::vector<FunctionId> list(const ListFilter& filter) const;
  std::vector<FunctionId> list(const std::function<bool(const FunctionMeta&)>& pred) const;
  CatalogStats stats() const;

  // Entries sorted by canonical name.
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const ConstantTable& table(std::string_view name) const;
  const std::map<std::string, ConstantTable, std::less<>>& tables() const { return tables_; }

  // Symbols of tier 1/2 entries that resolve to neither a parameter nor a
  // constant table, formatted "entry:symbol".
  std::vector<std::string> free_symbols() const;

  // The top-25 list plus the two dynamic functions.
  static const std::vector<std::string>& tier1_names();
  // tier1_names() without the two dynamic functions.
  static std::vector<std::string> top25_names();

 private:
  friend const Catalog& catalog();
  Catalog();

  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, ConstantTable, std::less<>> tables_;
};

// Built once on first use, immutable afterwards.
const Catalog& catalog();

const CatalogEntry& lookup(std::string_view name);
std::vector<FunctionId> list(const ListFilter& filter);
CatalogStats catalog_stats();

}  // namespace optbench
