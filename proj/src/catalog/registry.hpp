#pragma once

// Helpers for declaring catalog entries. Internal to the catalog sources.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "optbench/catalog.hpp"

namespace optbench::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

struct Def {
  std::string name;
  int eq = 0;
  std::string title;
  std::vector<std::string> aliases;
  // Space separated labels: C/NC continuity, D/ND differentiability,
  // S/NS separability, Sc/NSc scalability, U/M modality, plus "stoch" and
  // "dyn". Absent labels stay unknown.
  std::string props;
  BoundsTemplate bounds{{-5.0}, {5.0}};
  std::vector<BoundsTemplate> alt;
  DimClass dim = DimClass::fixed(2);
  int tier = 2;
  std::string tier_reason;
  std::vector<Param> params;
  std::vector<std::string> constants;
  std::vector<std::string> symbols;
  std::vector<OptimumRecord> optima;
  std::vector<std::string> notes;
  bool simplified = false;
  Body body;
  StateFactory state;
};

class Registry {
 public:
  void add(Def def);
  void table(std::string name, std::size_t rows, std::size_t cols, Vec data);

  std::vector<CatalogEntry>& entries() { return entries_; }
  std::map<std::string, ConstantTable, std::less<>>& tables() { return tables_; }
  const ConstantTable& get(std::string_view name) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, ConstantTable, std::less<>> tables_;
};

PropertySet parse_props(const std::string& text);

inline BoundsTemplate box(Vec lo, Vec hi) { return {std::move(lo), std::move(hi)}; }
inline BoundsTemplate range(double lo, double hi) { return {{lo}, {hi}}; }
inline BoundsTemplate range_times_dim(double lo, double hi, int power = 1) {
  return {{lo}, {hi}, power};
}

inline constexpr Provenance P = Provenance::paper_claimed;
inline constexpr Provenance V = Provenance::verified;
inline constexpr Provenance B = Provenance::both;

// Tolerance for values printed with rounded digits: 1e-3 absolute, or
// relative when |f| > 1.
inline double rounded(double v) { return 1e-3 * std::max(1.0, std::fabs(v)); }
inline constexpr double kExact = 1e-6;

inline OptimumRecord at(Vec loc, double value, Provenance p, double tol = kExact) {
  OptimumRecord r;
  r.dimension = loc.size();
  r.location = std::move(loc);
  r.value = value;
  r.provenance = p;
  r.tol = tol;
  return r;
}

inline OptimumRecord at_all(double coord, double value, Provenance p, double tol = kExact,
                            std::size_t dim = 0) {
  OptimumRecord r;
  r.location = {coord};
  r.all_equal = true;
  r.value = value;
  r.provenance = p;
  r.tol = tol;
  r.dimension = dim;
  return r;
}

inline OptimumRecord value_only(double value, Provenance p, std::size_t dim = 0,
                                double tol = kExact) {
  OptimumRecord r;
  r.value = value;
  r.provenance = p;
  r.dimension = dim;
  r.tol = tol;
  return r;
}

inline OptimumRecord per_dim(OptimumRecord r, double per) {
  r.value = 0.0;
  r.value_per_dim = per;
  return r;
}

inline OptimumRecord affine(OptimumRecord r, double base, double per) {
  r.value = base;
  r.value_per_dim = per;
  return r;
}

inline double sq(double v) { return v * v; }
inline double cube(double v) { return v * v * v; }
inline double pow4(double v) { return sq(sq(v)); }
inline double pow6(double v) { return cube(sq(v)); }
inline double sum_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

// Throws DomainError for formula singularities.
[[noreturn]] void domain_error(const std::string& entry, const std::string& what);

// Real power with a DomainError when the result would be complex or infinite
// because of a negative base with a non-integer exponent or a zero base with a
// negative exponent.
double real_pow(const char* entry, double base, double exponent);

// Calls another registered entry's body (composition functions).
double call_entry(std::string_view name, std::span<const double> x);

// Entry groups, in source order.
void register_group_1(Registry& r);
void register_group_2(Registry& r);
void register_group_3(Registry& r);
void register_group_4(Registry& r);
void register_constants(Registry& r);

}  // namespace optbench::detail
