#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "optbench/catalog.hpp"
#include "optbench/dynamic.hpp"

using namespace optbench;

namespace {

std::vector<Vec> random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(sample_uniform(Bounds::uniform(-5, 5, dim), rng));
  return pts;
}

}  // namespace

TEST(Ddb, ValueAtTheta) {
  // sin(x0 + t0) cos(x1 + t1) exp(-|x - t|^2)
  const Vec x{0.4, -0.3}, t{0.1, 0.2};
  const double expect = std::sin(0.5) * std::cos(-0.1) * std::exp(-(0.09 + 0.25));
  EXPECT_DOUBLE_EQ(ddb_value(x, t), expect);
}

TEST(Ddb, SeedDeterminism) {
  DynamicSession a(DynamicKind::ddb, 2, 42), b(DynamicKind::ddb, 2, 42);
  for (const Vec& x : random_points(100, 2, 1)) EXPECT_EQ(a.evaluate(x), b.evaluate(x));
  EXPECT_EQ(a.theta(), b.theta());
}

TEST(Ddb, DifferentSeedsDiffer) {
  DynamicSession a(DynamicKind::ddb, 2, 1), b(DynamicKind::ddb, 2, 2);
  const Vec x{0.5, 0.5};
  bool differ = false;
  for (int i = 0; i < 10; ++i) differ |= a.evaluate(x) != b.evaluate(x);
  EXPECT_TRUE(differ);
}

TEST(Ddb, DriftWithoutNoise) {
  DynamicSession s(DynamicKind::ddb, 2, 7, 0.05);
  s.suppress_noise(true);
  const Vec x{0.5, 0.5};
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i < 100; ++i) {
    const double f = s.evaluate(x);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  EXPECT_GT(hi - lo, 0.0);
}

TEST(Ddb, ZeroSigmaIsStatic) {
  DynamicSession s(DynamicKind::ddb, 2, 7, 0.0);
  s.suppress_noise(true);
  const Vec x{0.5, 0.5};
  const double f0 = s.evaluate(x);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(s.evaluate(x), f0);
  EXPECT_EQ(s.theta(), Vec(2, 0.0));
}

TEST(Ddb, NoiseHasConfiguredScale) {
  DynamicSession s(DynamicKind::ddb, 2, 3, 0.0);
  const Vec x{2.0, 2.0};
  const double clean = ddb_value(x, Vec{0, 0});
  double ss = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) ss += std::pow(s.evaluate(x) - clean, 2);
  EXPECT_NEAR(std::sqrt(ss / n), kDdbNoiseSd, 0.01);
}

TEST(Ddb, RejectsOneDimension) {
  EXPECT_THROW(DynamicSession(DynamicKind::ddb, 1, 1), Error);
  EXPECT_THROW(DynamicSession(DynamicKind::cddb, 0, 1), Error);
  EXPECT_THROW(DynamicSession(DynamicKind::ddb, 2, 1, -0.1), Error);
}

TEST(Cddb, ZeroThetaAtOrigin) {
  for (std::size_t n : {1u, 2u, 5u}) {
    DynamicSession s(DynamicKind::cddb, n, 1);
    s.suppress_noise(true);
    EXPECT_EQ(s.evaluate(Vec(n, 0.0)), 0.1 * double(n));
  }
}

TEST(Cddb, SaturatesInsteadOfOverflowing) {
  bool sat = false;
  const double f = cddb_value(Vec{1e200, 1e200}, Vec{3.0, 3.0}, &sat);
  EXPECT_TRUE(std::isfinite(f));
  EXPECT_TRUE(sat);
  EXPECT_EQ(std::fabs(f), kSaturation);
  cddb_value(Vec{0.5, 0.5}, Vec{0.1, 0.1}, &sat);
  EXPECT_FALSE(sat);
}

TEST(Session, HistoryIsBounded) {
  DynamicSession s(DynamicKind::cddb, 2, 5, 0.05, 8);
  for (const Vec& x : random_points(20, 2, 4)) s.evaluate(x);
  EXPECT_EQ(s.history().size(), 8u);
  EXPECT_EQ(s.eval_count(), 20u);
}

TEST(Session, SnapshotRestoreContinuesBitIdentically) {
  for (DynamicKind k : {DynamicKind::ddb, DynamicKind::cddb}) {
    DynamicSession a(k, 3, 99);
    const auto pts = random_points(60, 3, 8);
    for (int i = 0; i < 30; ++i) a.evaluate(pts[i]);
    DynamicSession b = DynamicSession::restore(a.snapshot());
    EXPECT_EQ(b.snapshot(), a.snapshot());
    for (int i = 30; i < 60; ++i) {
      const double fa = a.evaluate(pts[i]), fb = b.evaluate(pts[i]);
      EXPECT_EQ(std::memcmp(&fa, &fb, sizeof fa), 0);
    }
  }
}

TEST(Session, CorruptSnapshotRejected) {
  DynamicSession a(DynamicKind::ddb, 2, 1);
  a.evaluate(Vec{0, 0});
  std::string blob = a.snapshot();
  for (const std::string& bad : {std::string("nonsense"), blob.substr(0, blob.size() / 2),
                                  std::string("optbench-dynamic-session 2\n") + blob.substr(blob.find('\n') + 1)}) {
    try {
      DynamicSession::restore(bad);
      ADD_FAILURE() << "accepted a corrupt snapshot";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CorruptSnapshot);
    }
  }
}

TEST(Catalog, DynamicEntriesAreSessions) {
  ProblemInstance p = make_problem("complex-dynamic-deceptive-basin", 4, 13);
  DynamicSession s(DynamicKind::cddb, 4, 13);
  const Vec x{0.1, 0.2, 0.3, 0.4};
  for (int i = 0; i < 10; ++i) EXPECT_EQ(p.evaluate(x), s.evaluate(x));
}
