#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "optbench/catalog.hpp"
#include "optbench/verify.hpp"

using namespace optbench;

namespace {

const OptimumRecord& first_record(const std::string& name) {
  return lookup(name).meta.optima.at(0);
}

OptimumRecord claim(Vec loc, double value, double tol) {
  OptimumRecord r;
  r.location = std::move(loc);
  r.value = value;
  r.provenance = Provenance::paper_claimed;
  r.tol = tol;
  return r;
}

// Strict 8-neighbour minima of g over the endpoint-inclusive grid.
std::size_t oracle_grid_minima(const std::function<double(double, double)>& g, double lo0, double hi0,
                               double lo1, double hi1, std::size_t m) {
  std::vector<double> v(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const double x = c + 1 == m ? hi0 : lo0 + (hi0 - lo0) * double(c) / double(m - 1);
      const double y = r + 1 == m ? hi1 : lo1 + (hi1 - lo1) * double(r) / double(m - 1);
      v[r * m + c] = g(x, y);
    }
  }
  std::size_t n = 0;
  for (std::size_t r = 1; r + 1 < m; ++r) {
    for (std::size_t c = 1; c + 1 < m; ++c) {
      bool low = true;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
          if ((dr || dc) && !(v[r * m + c] < v[(r + dr) * m + c + dc])) low = false;
      n += low;
    }
  }
  return n;
}

std::size_t oracle_minima_1d(const std::function<double(double)>& g, double lo, double hi, std::size_t m) {
  std::vector<double> v(m);
  for (std::size_t c = 0; c < m; ++c) v[c] = g(c + 1 == m ? hi : lo + (hi - lo) * double(c) / double(m - 1));
  std::size_t n = 0;
  for (std::size_t c = 1; c + 1 < m; ++c) n += v[c] < v[c - 1] && v[c] < v[c + 1];
  return n;
}

}  // namespace

TEST(VerifyOptimum, SphereConfirmed) {
  ProblemInstance p = make_problem("sphere", 3);
  const ClaimStatus s = verify_optimum(p, first_record("sphere"), 3000, 1e-9, 1);
  EXPECT_EQ(s.verdict, Verdict::confirmed);
  EXPECT_LE(s.best_f, 1e-9);
  EXPECT_EQ(s.value_at_claim, 0.0);
}

TEST(VerifyOptimum, SchwefelConfirmedInsideBounds) {
  ProblemInstance p = make_problem("schwefel", 2);
  const ClaimStatus s = verify_optimum(p, first_record("schwefel"), 10000, 1e-3, 1);
  EXPECT_EQ(s.verdict, Verdict::confirmed) << s.detail;
  EXPECT_TRUE(p.bounds().contains(s.best_x));
}

TEST(VerifyOptimum, DropWaveRefutedWithCheckableWitness) {
  ProblemInstance p = make_problem("drop-wave", 2);
  const OptimumRecord& r = first_record("drop-wave");
  const ClaimStatus s = verify_optimum(p, r, 10000, r.tol, 1);
  ASSERT_EQ(s.verdict, Verdict::refuted);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(p.bounds().contains(*s.witness));
  ProblemInstance q = make_problem("drop-wave", 2);
  const double f = q.evaluate(*s.witness);
  EXPECT_EQ(f, s.witness_f);
  EXPECT_LT(f, r.value - r.tol);
  EXPECT_EQ(q.evaluations(), 1u);
}

TEST(VerifyOptimum, FalseLocationRefuted) {
  // f(2, 2) = 8 on the sphere, and the search finds 0.
  ProblemInstance p = make_problem("sphere", 2);
  const ClaimStatus s = verify_optimum(p, claim({2.0, 2.0}, 8.0, 1e-6), 2000, 1e-6, 3);
  EXPECT_EQ(s.verdict, Verdict::refuted);
}

TEST(VerifyOptimum, UnreachedValueInconclusive) {
  // Value-only claims: confirmed when the search reaches the value, otherwise
  // inconclusive when the value lies below everything found.
  ProblemInstance p = make_problem("sphere", 2);
  OptimumRecord r = claim({}, 0.0, 1e-6);
  r.location.clear();
  const ClaimStatus ok = verify_optimum(p, r, 2000, 1e-6, 3);
  EXPECT_EQ(ok.verdict, Verdict::confirmed);
  r.value = -1.0;
  ProblemInstance q = make_problem("sphere", 2);
  EXPECT_EQ(verify_optimum(q, r, 2000, 1e-6, 3).verdict, Verdict::inconclusive);
}

TEST(VerifyOptimum, Rejections) {
  ProblemInstance p = make_problem("sphere", 4);
  EXPECT_THROW(verify_optimum(p, first_record("sphere"), 399, 1e-6, 1), Error);
  EXPECT_THROW(verify_optimum(p, first_record("sphere"), 1000, 0.0, 1), Error);
  ProblemInstance d = make_problem("dynamic-deceptive-basin", 2, 1);
  try {
    verify_optimum(d, first_record("sphere"), 1000, 1e-6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StochasticUnverifiable);
  }
}

TEST(VerifyOptimum, BudgetRespected) {
  ProblemInstance p = make_problem("ackley", 3);
  const ClaimStatus s = verify_optimum(p, first_record("ackley"), 1234, 1e-6, 2);
  EXPECT_LE(p.evaluations(), 1234u + 1);
  EXPECT_EQ(s.budget_used, p.evaluations());
}

// Starts do not depend on the budget and each start's simplex run with a
// larger share extends the same trajectory, so best-found cannot rise.
TEST(VerifyOptimum, BestFoundNonIncreasingInBudget) {
  for (const char* n : {"ackley", "schwefel", "holder-table", "thevenot", "cross-leg-table"}) {
    const OptimumRecord& r = first_record(n);
    double prev = INFINITY;
    for (std::uint64_t b : {1000u, 2000u, 4000u, 8000u}) {
      ProblemInstance p = make_problem(n, 2);
      const double f = verify_optimum(p, r, b, r.tol, 1).best_f;
      EXPECT_LE(f, prev) << n << " budget " << b;
      prev = f;
    }
  }
}

TEST(Separability, SeparableEntries) {
  for (const char* n : {"sphere", "sum-squares", "rastrigin", "powell-sum"}) {
    ProblemInstance p = make_problem(n, 4);
    const auto r = test_separability(p, 20, 1e-4, 1e-6, 1);
    EXPECT_TRUE(r.separable) << n << " max mixed " << r.max_mixed;
  }
}

// Hand-derived mixed partials: matyas -0.48 everywhere; rosenbrock -400 x_i
// for each adjacent pair; mccormick -sin(x + y) - 2.
TEST(Separability, MixedPartialsMatchAnalyticForms) {
  ProblemInstance m = make_problem("matyas", 2);
  const auto rm = test_separability(m, 20, 1e-4, 1e-6, 1);
  EXPECT_FALSE(rm.separable);
  EXPECT_NEAR(rm.max_mixed, 0.48, 1e-5);

  ProblemInstance r = make_problem("rosenbrock", 2);
  const auto rr = test_separability(r, 20, 1e-4, 1e-6, 1);
  EXPECT_FALSE(rr.separable);
  EXPECT_NEAR(rr.max_mixed, 400.0 * std::fabs(rr.witness[0]), 1e-3 * rr.max_mixed);

  ProblemInstance c = make_problem("mccormick", 2);
  const auto rc = test_separability(c, 20, 1e-4, 1e-6, 1);
  EXPECT_FALSE(rc.separable);
  EXPECT_NEAR(rc.max_mixed, std::fabs(-std::sin(rc.witness[0] + rc.witness[1]) - 2.0), 1e-5);
  EXPECT_EQ(rc.evaluations, 20u * 5u);
}

TEST(Separability, ProductCouplingDetected) {
  ProblemInstance p = make_problem("alpine-n2", 2);
  EXPECT_FALSE(test_separability(p, 20, 1e-4, 1e-6, 1).separable);
}

TEST(Smoothness, SmoothEntriesAgree) {
  for (const std::string& n : Catalog::tier1_names()) {
    const FunctionMeta& m = lookup(n).meta;
    if (m.properties.dynamic || m.properties.differentiable != Label::yes) continue;
    const std::size_t d = m.dim_class.accepts(2) ? 2 : m.dim_class.n;
    ProblemInstance p = make_problem(n, d);
    const SmoothnessReport r = probe_smoothness(p, 20, 1);
    EXPECT_EQ(r.points, 20u);
    EXPECT_EQ(r.gradient_disagreements, 0u) << n;
    EXPECT_FALSE(r.differentiability_flag) << n;
  }
}

TEST(Smoothness, NoSingularPointsInsideBounds) {
  // vincent's log is singular only at x <= 0, outside its bounds.
  ProblemInstance p = make_problem("vincent", 2);
  const SmoothnessReport r = probe_smoothness(p, 20, 4);
  EXPECT_EQ(r.nonfinite, 0u);
  EXPECT_EQ(r.points, 20u);
}

TEST(Smoothness, PiecewiseConstantStepAgrees) {
  // Away from the jumps both difference quotients are exactly 0, and random
  // points land within h of a jump with probability about 2e-5.
  ProblemInstance p = make_problem("step", 2);
  const SmoothnessReport r = probe_smoothness(p, 20, 1);
  EXPECT_EQ(r.gradient_disagreements, 0u);
  EXPECT_EQ(r.max_relative_disagreement, 0.0);
}

TEST(GridMinima, Himmelblau) {
  ProblemInstance p = make_problem("himmelblau", 2);
  const Bounds& b = p.bounds();
  const auto g = [](double x, double y) {
    return std::pow(x * x + y - 11, 2) + std::pow(x + y * y - 7, 2);
  };
  const std::size_t expect = oracle_grid_minima(g, b.lower()[0], b.upper()[0], b.lower()[1], b.upper()[1], 101);
  EXPECT_EQ(expect, 4u);
  EXPECT_EQ(count_grid_minima_2d(p, 101), expect);
}

TEST(GridMinima, SeparableRastriginIsProductOfLineCounts) {
  ProblemInstance p = make_problem("rastrigin", 2);
  const Bounds& b = p.bounds();
  const auto g = [](double x) { return x * x - 10 * std::cos(2 * M_PI * x) + 10; };
  for (std::size_t m : {21u, 101u, 201u}) {
    const std::size_t a = oracle_minima_1d(g, b.lower()[0], b.upper()[0], m);
    const std::size_t c = oracle_minima_1d(g, b.lower()[1], b.upper()[1], m);
    EXPECT_EQ(count_grid_minima_2d(p, m), a * c) << m;
  }
}

TEST(GridMinima, SphereAndRipple) {
  ProblemInstance s = make_problem("sphere", 2);
  EXPECT_EQ(count_grid_minima_2d(s, 101), 1u);
  ProblemInstance r = make_problem("ripple-25", 2);
  EXPECT_EQ(count_grid_minima_2d(r, 101), 25u);
}

TEST(GridMinima, Rejections) {
  ProblemInstance p = make_problem("sphere", 3);
  EXPECT_THROW(count_grid_minima_2d(p, 11), Error);
  ProblemInstance q = make_problem("sphere", 2);
  EXPECT_THROW(count_grid_minima_2d(q, 2), Error);
}

TEST(EffectiveDimension, Rules) {
  EXPECT_EQ(effective_dimension(lookup("booth").meta, 5), 2u);
  EXPECT_EQ(effective_dimension(lookup("sphere").meta, 5), 5u);
  EXPECT_EQ(effective_dimension(lookup("powell").meta, 2), 4u);
  EXPECT_EQ(effective_dimension(lookup("powell").meta, 5), 8u);
}

TEST(Report, DeterministicExceptTimestamp) {
  const VerificationReport a = full_report("rosenbrock", 2, 7, 2000);
  const VerificationReport b = full_report("rosenbrock", 2, 7, 2000);
  ASSERT_EQ(a.claims.size(), b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    EXPECT_EQ(a.claims[i].best_x, b.claims[i].best_x);
    EXPECT_EQ(a.claims[i].verdict, b.claims[i].verdict);
  }
  ASSERT_TRUE(a.separability && b.separability);
  EXPECT_EQ(a.separability->max_mixed, b.separability->max_mixed);
  EXPECT_FALSE(a.timestamp.empty());
  EXPECT_EQ(a.timestamp.back(), 'Z');
}

TEST(Report, SkipsAndErrors) {
  try {
    full_report("cola", 2, 1, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Tier3Unimplementable);
  }
  const VerificationReport d = full_report("dynamic-deceptive-basin", 2, 1, 1000);
  EXPECT_TRUE(d.claims.empty());
  EXPECT_FALSE(d.skipped.empty());
  const VerificationReport h = full_report("himmelblau", 2, 1, 2000);
  ASSERT_TRUE(h.grid.has_value());
  EXPECT_EQ(h.grid->minima, 4u);
}

TEST(Report, FixedDimensionNoted) {
  const VerificationReport r = full_report("booth", 3, 1, 1000);
  EXPECT_EQ(r.dim, 2u);
  EXPECT_FALSE(r.findings.empty());
}
