#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "optbench/catalog.hpp"
#include "optbench/core.hpp"

using namespace optbench;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no optbench::Error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.uniform(-1, 1), b.uniform(-1, 1));
    EXPECT_EQ(a.normal(0, 1), b.normal(0, 1));
  }
}

TEST(Rng, StateRoundTrip) {
  Rng a(7);
  a.uniform(0, 1);
  Rng b;
  b.set_state(a.state());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(code_of([&] { b.set_state("garbage"); }), ErrorCode::CorruptSnapshot);
}

TEST(Rng, ZeroSdDrawsNothing) {
  Rng a(3), b(3);
  EXPECT_EQ(a.normal(2.5, 0.0), 2.5);
  EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, DerivedSeedsDifferByLabel) {
  EXPECT_EQ(derive_seed(1, "sphere"), derive_seed(1, "sphere"));
  EXPECT_NE(derive_seed(1, "sphere"), derive_seed(1, "rastrigin"));
  EXPECT_NE(derive_seed(1, "sphere"), derive_seed(2, "sphere"));
}

TEST(Bounds, Validation) {
  EXPECT_EQ(code_of([] { Bounds({1.0}, {0.0}); }), ErrorCode::InvalidBounds);
  EXPECT_EQ(code_of([] { Bounds({0.0, 0.0}, {1.0}); }), ErrorCode::InvalidBounds);
  const Bounds b = Bounds::uniform(-2, 3, 4);
  EXPECT_EQ(b.dimension(), 4u);
  EXPECT_EQ(b.width(2), 5.0);
  EXPECT_TRUE(b.contains(Vec{0, 0, 0, 3}));
  EXPECT_FALSE(b.contains(Vec{0, 0, 0, 3.1}));
}

TEST(Bounds, DimensionScaledTemplate) {
  BoundsTemplate t{{-1.0}, {1.0}, 2};
  const Bounds b = t.bind(6);
  EXPECT_EQ(b.lower()[0], -36.0);
  EXPECT_EQ(b.upper()[5], 36.0);
}

TEST(DimClass, Accepts) {
  EXPECT_TRUE(DimClass::fixed(2).accepts(2));
  EXPECT_FALSE(DimClass::fixed(2).accepts(3));
  EXPECT_TRUE(DimClass::scalable(2).accepts(7));
  EXPECT_FALSE(DimClass::scalable(2).accepts(1));
  EXPECT_TRUE(DimClass::scalable(4, 4).accepts(8));
  EXPECT_FALSE(DimClass::scalable(4, 4).accepts(6));
}

TEST(Problem, ErrorsAtConstruction) {
  EXPECT_EQ(code_of([] { make_problem("no-such-function", 2); }), ErrorCode::UnknownFunction);
  EXPECT_EQ(code_of([] { make_problem("cola", 2); }), ErrorCode::Tier3Unimplementable);
  EXPECT_EQ(code_of([] { make_problem("booth", 3); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { make_problem("dynamic-deceptive-basin", 2); }), ErrorCode::MissingSeed);
}

TEST(Problem, EvaluateChecksInput) {
  ProblemInstance p = make_problem("sphere", 3);
  EXPECT_EQ(code_of([&] { p.evaluate(Vec{1, 2}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { p.evaluate(Vec{1, std::nan(""), 2}); }), ErrorCode::NonFiniteInput);
  EXPECT_EQ(p.evaluations(), 0u);
  EXPECT_EQ(p.evaluate(Vec{1, 2, 3}), 14.0);
  EXPECT_EQ(p.evaluations(), 1u);
}

TEST(Problem, SingularityIsDomainError) {
  ProblemInstance p = make_problem("vincent", 2);
  EXPECT_EQ(code_of([&] { p.evaluate(Vec{-1, 1}); }), ErrorCode::DomainError);
}

TEST(Problem, OutOfBoundsEvaluationAllowed) {
  ProblemInstance p = make_problem("sphere", 2);
  EXPECT_EQ(p.evaluate(Vec{1000, 0}), 1e6);
}

TEST(Problem, DeterministicEntriesDropSeed) {
  EXPECT_FALSE(make_problem("sphere", 2, 5).seed().has_value());
  EXPECT_EQ(make_problem("dynamic-deceptive-basin", 2, 5).seed(), 5u);
}

TEST(Problem, StochasticEntryReproducibleBySeed) {
  ProblemInstance a = make_problem("dynamic-deceptive-basin", 2, 11);
  ProblemInstance b = make_problem("dynamic-deceptive-basin", 2, 11);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.evaluate(Vec{0.3, -0.2}), b.evaluate(Vec{0.3, -0.2}));
}

TEST(Problem, CopyClonesState) {
  ProblemInstance a = make_problem("dynamic-deceptive-basin", 2, 9);
  a.evaluate(Vec{0.1, 0.1});
  ProblemInstance b = a;
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.evaluate(Vec{0.5, 0.5}), b.evaluate(Vec{0.5, 0.5}));
}

TEST(Gradient, CentralDifferenceMatchesAnalytic) {
  ProblemInstance p = make_problem("rosenbrock", 2);
  const Vec x{0.3, -0.7};
  const Vec g = gradient_fd(p, x, 1e-6);
  // d/dx0 = -400 x0 (x1 - x0^2) - 2 (1 - x0); d/dx1 = 200 (x1 - x0^2)
  const double g0 = -400 * 0.3 * (-0.7 - 0.09) - 2 * (1 - 0.3);
  const double g1 = 200 * (-0.7 - 0.09);
  EXPECT_NEAR(g[0], g0, 1e-5);
  EXPECT_NEAR(g[1], g1, 1e-5);
  EXPECT_EQ(p.evaluations(), 4u);
}

TEST(Gradient, Rejections) {
  ProblemInstance p = make_problem("sphere", 2);
  EXPECT_EQ(code_of([&] { gradient_fd(p, Vec{0, 0}, 0.0); }), ErrorCode::InvalidConfig);
  ProblemInstance d = make_problem("dynamic-deceptive-basin", 2, 1);
  EXPECT_EQ(code_of([&] { gradient_fd(d, Vec{0, 0}, 1e-5); }), ErrorCode::StochasticGradientUnsupported);
}

TEST(Sampling, UniformStaysInBounds) {
  Rng rng(5);
  const Bounds b({-1, 10}, {1, 11});
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(b.contains(sample_uniform(b, rng)));
}
