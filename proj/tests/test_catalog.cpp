#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "optbench/catalog.hpp"
#include "optbench/verify.hpp"

using namespace optbench;

namespace {

bool contains(const std::vector<FunctionId>& ids, const std::string& name) {
  return std::any_of(ids.begin(), ids.end(), [&](const FunctionId& id) { return id.canonical_name == name; });
}

std::vector<std::size_t> dims_for(const OptimumRecord& r, const DimClass& dc) {
  if (r.dimension != 0) return {r.dimension};
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= 10; ++d) {
    if (dc.accepts(d)) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Catalog, SizeAndTiers) {
  const CatalogStats s = catalog_stats();
  EXPECT_GE(s.total, 300u);
  EXPECT_EQ(s.per_tier.at(1), 27u);
  EXPECT_EQ(Catalog::tier1_names().size(), 27u);
  EXPECT_EQ(Catalog::top25_names().size(), 25u);
  std::size_t sum = 0;
  for (const auto& [tier, n] : s.per_tier) sum += n;
  EXPECT_EQ(sum, s.total);
}

TEST(Catalog, NamesUniqueAndSorted) {
  const auto& es = catalog().entries();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < es.size(); ++i) {
    EXPECT_TRUE(seen.insert(es[i].meta.id.canonical_name).second);
    if (i > 0) {
      EXPECT_LT(es[i - 1].meta.id.canonical_name, es[i].meta.id.canonical_name);
    }
  }
}

TEST(Catalog, LookupByAlias) {
  EXPECT_EQ(lookup("de-jong").meta.id.canonical_name, "sphere");
  EXPECT_EQ(lookup("banana").meta.id.canonical_name, "rosenbrock");
  try {
    lookup("not-a-function");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFunction);
  }
}

TEST(Catalog, Tier1ListMatchesTierField) {
  for (const std::string& n : Catalog::tier1_names()) EXPECT_EQ(lookup(n).meta.tier, 1) << n;
  ListFilter f;
  f.tier = 1;
  EXPECT_EQ(list(f).size(), 27u);
}

TEST(Catalog, Tier3EntriesCarryReasons) {
  std::size_t n = 0;
  for (const auto& e : catalog().entries()) {
    if (e.meta.tier != 3) {
      EXPECT_TRUE(static_cast<bool>(e.body) || static_cast<bool>(e.make_state)) << e.meta.id.canonical_name;
      continue;
    }
    ++n;
    EXPECT_FALSE(e.meta.tier_reason.empty()) << e.meta.id.canonical_name;
    EXPECT_FALSE(e.evaluable());
  }
  EXPECT_GT(n, 0u);
}

TEST(Catalog, NoFreeSymbols) {
  const auto free = catalog().free_symbols();
  EXPECT_TRUE(free.empty()) << free.front();
}

TEST(Catalog, ConstantTablesHavePrintedShapes) {
  const ConstantTable& a = catalog().table("shekel10.A");
  EXPECT_EQ(a.rows, 10u);
  EXPECT_EQ(a.cols, 4u);
  EXPECT_EQ(a.size(), 40u);
  EXPECT_EQ(catalog().table("hartmann6.A").rows, 4u);
  EXPECT_EQ(catalog().table("hartmann6.A").cols, 6u);
}

TEST(Filter, UnimodalSeparable) {
  ListFilter f;
  f.modality = Modality::unimodal;
  f.separable = true;
  const auto ids = list(f);
  EXPECT_TRUE(contains(ids, "sphere"));
  EXPECT_TRUE(contains(ids, "sum-squares"));
  EXPECT_FALSE(contains(ids, "rosenbrock"));
}

TEST(Filter, DynamicExactlyTwo) {
  ListFilter f;
  f.dynamic = true;
  const auto ids = list(f);
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_TRUE(contains(ids, "dynamic-deceptive-basin"));
  EXPECT_TRUE(contains(ids, "complex-dynamic-deceptive-basin"));
}

// Labels follow the source text even where a probe contradicts them:
// rastrigin is labelled non-separable although its sum separates.
TEST(Filter, LabelsFollowSourceText) {
  ListFilter f;
  f.modality = Modality::multimodal;
  f.separable = false;
  EXPECT_TRUE(contains(list(f), "rastrigin"));
  const VerificationReport r = full_report("rastrigin", 2, 1, 1000);
  ASSERT_TRUE(r.separability.has_value());
  EXPECT_TRUE(r.separability->separable);
  EXPECT_EQ(r.separability_check, "inconsistent");
}

TEST(Filter, UnknownLabelsMatchNeitherValue) {
  ListFilter yes, no;
  yes.continuous = true;
  no.continuous = false;
  for (const auto& e : catalog().entries()) {
    if (e.meta.properties.continuous != Label::unknown) continue;
    EXPECT_FALSE(yes.matches(e.meta));
    EXPECT_FALSE(no.matches(e.meta));
  }
}

TEST(Filter, Dimension) {
  ListFilter f;
  f.dimension = 3;
  const auto ids = list(f);
  EXPECT_TRUE(contains(ids, "sphere"));
  EXPECT_FALSE(contains(ids, "booth"));
}

// Every verified record (and every stated claim that was confirmed) must
// reproduce its value at its location.
TEST(Records, VerifiedOptimaReproduce) {
  std::size_t checked = 0;
  for (const auto& e : catalog().entries()) {
    if (!e.evaluable() || e.meta.properties.stochastic) continue;
    for (const OptimumRecord& r : e.meta.optima) {
      if (r.provenance == Provenance::paper_claimed || !r.has_location()) continue;
      for (std::size_t d : dims_for(r, e.meta.dim_class)) {
        if (!e.meta.dim_class.accepts(d)) continue;
        ProblemInstance p = make_problem(e.meta.id.canonical_name, d);
        const double f = p.evaluate(r.location_at(d));
        EXPECT_LE(std::fabs(f - r.value_at(d)), r.tol) << e.meta.id.canonical_name << " d=" << d;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

// Tier 1: every entry has a location record, and the confirmed ones match to
// 1e-9 relative when exact.
TEST(Records, Tier1Audit) {
  for (const std::string& n : Catalog::tier1_names()) {
    const CatalogEntry& e = lookup(n);
    if (e.meta.properties.dynamic) continue;
    const OptimumRecord* best = nullptr;
    for (const auto& r : e.meta.optima) {
      if (r.provenance != Provenance::paper_claimed && r.has_location()) {
        best = &r;
        break;
      }
    }
    ASSERT_NE(best, nullptr) << n;
    const std::size_t d = best->dimension ? best->dimension : std::max<std::size_t>(2, e.meta.dim_class.n);
    ProblemInstance p = make_problem(n, d);
    const double f = p.evaluate(best->location_at(d));
    EXPECT_LE(std::fabs(f - best->value_at(d)), best->tol) << n;
  }
}

TEST(Records, ToleranceMatchesPrecision) {
  for (const auto& e : catalog().entries()) {
    for (const auto& r : e.meta.optima) {
      EXPECT_GT(r.tol, 0.0) << e.meta.id.canonical_name;
      EXPECT_LE(r.tol, 1.0 + 1e-3 * std::fabs(r.value) + 1e-3 * std::fabs(r.value_per_dim) * 10)
          << e.meta.id.canonical_name;
    }
  }
}

TEST(Bounds, DefaultBoundsBindForAcceptedDimensions) {
  for (const auto& e : catalog().entries()) {
    const DimClass& dc = e.meta.dim_class;
    const std::size_t d = dc.n == 0 ? 1 : dc.n;
    const Bounds b = e.meta.default_bounds.bind(d);
    EXPECT_EQ(b.dimension(), d) << e.meta.id.canonical_name;
  }
}
