#include "optbench/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <numeric>

#include "optbench/catalog.hpp"
#include "optbench/optimize.hpp"

namespace optbench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double eval_or_nan(ProblemInstance& p, std::span<const double> x) {
  try {
    return p.evaluate(x);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
    return kNaN;
  }
}

void require_deterministic(const ProblemInstance& p) {
  if (p.stochastic()) {
    raise(ErrorCode::StochasticUnverifiable, p.meta().id.canonical_name + " is stochastic");
  }
}

// Latin hypercube over the bounds: m points, one per stratum on every axis.
std::vector<Vec> latin_hypercube(const Bounds& b, std::size_t m, Rng& rng) {
  const std::size_t n = b.dimension();
  std::vector<Vec> pts(m, Vec(n));
  std::vector<std::size_t> perm(m);
  for (std::size_t j = 0; j < n; ++j) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = m; k > 1; --k) std::swap(perm[k - 1], perm[rng.index(k)]);
    for (std::size_t i = 0; i < m; ++i) {
      const double u = (double(perm[i]) + rng.uniform(0.0, 1.0)) / double(m);
      pts[i][j] = b.lower()[j] + u * b.width(j);
    }
  }
  return pts;
}

Vec interior_point(const Bounds& b, Rng& rng) {
  Vec x(b.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = 0.05 * b.width(i);
    x[i] = rng.uniform(b.lower()[i] + m, b.upper()[i] - m);
  }
  return x;
}

double inf_norm(const Vec& v) {
  double m = 0.0;
  for (double a : v) m = std::max(m, std::fabs(a));
  return m;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string label_check(Label label, bool observed) {
  if (label == Label::unknown) return "unlabelled";
  return (label == Label::yes) == observed ? "consistent" : "inconsistent";
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ClaimStatus verify_optimum(ProblemInstance& problem, const OptimumRecord& claim,
                           std::uint64_t budget, double tol, std::uint64_t seed) {
  require_deterministic(problem);
  const std::size_t n = problem.dimension();
  if (!(tol > 0.0)) raise(ErrorCode::InvalidConfig, "tolerance must be positive");
  if (budget < 100 * n) {
    raise(ErrorCode::InvalidConfig, "budget must be at least 100 * dimension");
  }
  if (!claim.applies_to(n)) {
    raise(ErrorCode::DimensionMismatch, "claim is stated for dimension " + std::to_string(claim.dimension));
  }
  const std::uint64_t before = problem.evaluations();
  const Bounds& b = problem.bounds();

  ClaimStatus st;
  st.record = claim;
  st.claimed_value = claim.value_at(n);
  st.value_at_claim = kNaN;
  Vec loc;
  if (claim.has_location()) {
    loc = claim.location_at(n);
    if (loc.size() != n) raise(ErrorCode::DimensionMismatch, "claimed location has the wrong size");
    st.value_at_claim = eval_or_nan(problem, loc);
  }

  Vec best_x;
  double best_f = std::numeric_limits<double>::infinity();
  Vec proj(n);
  const Objective search = [&](std::span<const double> x) {
    double pen = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      proj[i] = std::clamp(x[i], b.lower()[i], b.upper()[i]);
      pen += (x[i] - proj[i]) * (x[i] - proj[i]);
    }
    const double f = problem.evaluate(proj);
    if (f < best_f || best_x.empty()) {
      best_f = f;
      best_x = proj;
    }
    return f + pen;
  };

  Rng rng(seed);
  std::vector<Vec> starts;
  if (!loc.empty()) starts.push_back(loc);
  for (Vec& p : latin_hypercube(b, 16 * n, rng)) starts.push_back(std::move(p));
  OptimizerConfig cfg;
  cfg.kind = OptimizerKind::nelder_mead;
  cfg.budget = std::max<std::uint64_t>(1, budget / starts.size());
  cfg.seed = seed;
  Vec widths(n);
  for (std::size_t i = 0; i < n; ++i) widths[i] = b.width(i);
  for (const Vec& s : starts) nelder_mead(search, s, widths, cfg);

  st.best_x = best_x;
  st.best_f = best_f;
  st.gap = best_f - st.claimed_value;
  st.budget_used = problem.evaluations() - before;

  const double v = st.claimed_value;
  const bool finite_best = std::isfinite(best_f);
  const bool loc_matches = claim.has_location() ? std::fabs(st.value_at_claim - v) <= tol
                                                : finite_best && std::fabs(best_f - v) <= tol;
  if (finite_best && best_f < v - tol) {
    st.verdict = Verdict::refuted;
    st.detail = "found a point below the claimed value";
  } else if (finite_best && std::isfinite(st.value_at_claim) && best_f < st.value_at_claim - tol) {
    st.verdict = Verdict::refuted;
    st.detail = "claimed location is not a minimizer: found a point below its value";
  } else if (loc_matches) {
    st.verdict = Verdict::confirmed;
  } else {
    st.verdict = Verdict::inconclusive;
    st.detail = claim.has_location() ? "value at the claimed location differs from the claim"
                                     : "search did not reach the claimed value";
  }
  if (st.verdict == Verdict::refuted) {
    st.witness = best_x;
    st.witness_f = best_f;
  }
  return st;
}

SeparabilityResult test_separability(ProblemInstance& problem, std::size_t n_points, double h,
                                     double tol, std::uint64_t seed) {
  require_deterministic(problem);
  if (!(h > 0.0) || !(tol > 0.0)) raise(ErrorCode::InvalidConfig, "h and tol must be positive");
  const std::size_t n = problem.dimension();
  const std::uint64_t before = problem.evaluations();
  SeparabilityResult r;
  Rng rng(seed);
  for (std::size_t k = 0; k < n_points; ++k) {
    Vec x = interior_point(problem.bounds(), rng);
    r.max_abs_f = std::max(r.max_abs_f, std::fabs(problem.evaluate(x)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double xi = x[i], xj = x[j];
        auto at = [&](double di, double dj) {
          x[i] = xi + di;
          x[j] = xj + dj;
          const double f = problem.evaluate(x);
          x[i] = xi;
          x[j] = xj;
          return f;
        };
        const double m = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
        const double a = std::isnan(m) ? std::numeric_limits<double>::infinity() : std::fabs(m);
        if (a > r.max_mixed || r.witness.empty()) {
          r.max_mixed = a;
          r.i = i;
          r.j = j;
          r.witness = x;
        }
      }
    }
  }
  r.threshold = tol * (1.0 + r.max_abs_f);
  r.separable = r.max_mixed <= r.threshold;
  r.evaluations = problem.evaluations() - before;
  return r;
}

SmoothnessReport probe_smoothness(ProblemInstance& problem, std::size_t n_points,
                                  std::uint64_t seed) {
  require_deterministic(problem);
  const PropertySet& props = problem.meta().properties;
  SmoothnessReport r;
  Rng rng(seed);
  for (std::size_t k = 0; k < n_points; ++k) {
    const Vec x = interior_point(problem.bounds(), rng);
    ++r.points;
    const double f = eval_or_nan(problem, x);
    if (!std::isfinite(f)) {
      ++r.nonfinite;
      if (!r.nonfinite_witness) r.nonfinite_witness = x;
      continue;
    }
    double rel = std::numeric_limits<double>::infinity();
    try {
      const Vec g1 = gradient_fd(problem, x, 1e-5);
      const Vec g2 = gradient_fd(problem, x, 1e-6);
      Vec d(g1.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = g1[i] - g2[i];
      rel = inf_norm(d) / std::max({1.0, inf_norm(g1), inf_norm(g2)});
      if (std::isnan(rel)) rel = std::numeric_limits<double>::infinity();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DomainError) throw;
    }
    r.max_relative_disagreement = std::max(r.max_relative_disagreement, rel);
    if (rel > 1e-3) {
      ++r.gradient_disagreements;
      if (!r.gradient_witness) r.gradient_witness = x;
    }
  }
  r.continuity_flag = props.continuous == Label::yes && r.nonfinite > 0;
  r.differentiability_flag = props.differentiable == Label::yes && r.gradient_disagreements > 0;
  return r;
}

std::size_t count_grid_minima_2d(ProblemInstance& problem, std::size_t resolution) {
  require_deterministic(problem);
  if (problem.dimension() != 2) raise(ErrorCode::BadDimension, "grid probe needs dimension 2");
  if (resolution < 3) raise(ErrorCode::InvalidConfig, "resolution must be at least 3");
  const Bounds& b = problem.bounds();
  const std::size_t m = resolution;
  auto coord = [&](std::size_t axis, std::size_t k) {
    return k + 1 == m ? b.upper()[axis] : b.lower()[axis] + b.width(axis) * double(k) / double(m - 1);
  };
  Vec grid(m * m);
  Vec x(2);
  for (std::size_t r = 0; r < m; ++r) {
    x[1] = coord(1, r);
    for (std::size_t c = 0; c < m; ++c) {
      x[0] = coord(0, c);
      grid[r * m + c] = eval_or_nan(problem, x);
    }
  }
  std::size_t count = 0;
  for (std::size_t r = 1; r + 1 < m; ++r) {
    for (std::size_t c = 1; c + 1 < m; ++c) {
      const double f = grid[r * m + c];
      bool lowest = !std::isnan(f);
      for (int dr = -1; dr <= 1 && lowest; ++dr) {
        for (int dc = -1; dc <= 1 && lowest; ++dc) {
          if (dr == 0 && dc == 0) continue;
          lowest = f < grid[(r + dr) * m + (c + dc)];
        }
      }
      count += lowest;
    }
  }
  return count;
}

std::size_t effective_dimension(const FunctionMeta& meta, std::size_t requested) {
  const DimClass& dc = meta.dim_class;
  if (dc.accepts(requested)) return requested;
  if (dc.kind == DimClass::Kind::fixed || requested < dc.n) return dc.n;
  const std::size_t over = (requested - dc.n) % dc.step;
  return requested + (dc.step - over);
}

VerificationReport full_report(std::string_view id, std::size_t dim, std::uint64_t seed,
                               std::uint64_t budget) {
  const CatalogEntry& e = lookup(id);
  const FunctionMeta& m = e.meta;
  const std::string& name = m.id.canonical_name;
  if (!e.evaluable()) raise(ErrorCode::Tier3Unimplementable, name + ": " + m.tier_reason);

  VerificationReport rep;
  rep.function = name;
  rep.dim = effective_dimension(m, dim);
  rep.seed = seed;
  rep.budget = budget;
  rep.timestamp = utc_now();
  if (rep.dim != dim) {
    rep.findings.push_back("dimension " + std::to_string(dim) + " not accepted; probed at " +
                           std::to_string(rep.dim));
  }
  const std::size_t d = rep.dim;
  if (m.properties.stochastic) {
    rep.skipped.push_back("all probes: stochastic objective");
    return rep;
  }
  auto fresh = [&] { return make_problem(name, d); };

  for (std::size_t k = 0; k < m.optima.size(); ++k) {
    const OptimumRecord& rec = m.optima[k];
    if (!rec.applies_to(d)) continue;
    ProblemInstance p = fresh();
    ClaimStatus st = verify_optimum(p, rec, std::max<std::uint64_t>(budget, 100 * d), rec.tol,
                                    derive_seed(seed, name + ":optimum:" + std::to_string(k)));
    st.claim = "optimum[" + std::to_string(k) + "]";
    if (st.verdict == Verdict::refuted) {
      rep.findings.push_back(st.claim + " refuted (" + std::string(to_string(rec.provenance)) + ")");
    }
    rep.claims.push_back(std::move(st));
  }

  const PropertySet& props = m.properties;
  if (d < 2) {
    rep.skipped.push_back("separability: dimension 1");
  } else if (props.continuous == Label::no || props.differentiable == Label::no) {
    rep.skipped.push_back("separability: labelled non-continuous or non-differentiable");
  } else {
    try {
      ProblemInstance p = fresh();
      rep.separability = test_separability(p, 20, 1e-4, 1e-6, derive_seed(seed, name + ":separability"));
      rep.separability_check = label_check(props.separable, rep.separability->separable);
      if (rep.separability_check == "inconsistent") {
        rep.findings.push_back(std::string("separability label contradicted: mixed partial ") +
                               (rep.separability->separable ? "vanishes" : "is nonzero"));
      }
    } catch (const Error& ex) {
      if (ex.code() != ErrorCode::DomainError) throw;
      rep.skipped.push_back(std::string("separability: ") + ex.what());
    }
  }

  {
    ProblemInstance p = fresh();
    rep.smoothness = probe_smoothness(p, 20, derive_seed(seed, name + ":smoothness"));
    if (rep.smoothness->continuity_flag) {
      rep.findings.push_back("labelled continuous but produced non-finite values");
    }
    if (rep.smoothness->differentiability_flag) {
      rep.findings.push_back("labelled differentiable but finite-difference gradients disagree");
    }
  }

  if (d == 2) {
    ProblemInstance p = fresh();
    GridProbe g;
    g.resolution = 101;
    g.minima = count_grid_minima_2d(p, g.resolution);
    if (props.modality == Modality::unknown) {
      g.modality_check = "unlabelled";
    } else {
      const bool multi = g.minima > 1;
      g.modality_check = (props.modality == Modality::multimodal) == multi ? "consistent" : "inconsistent";
    }
    if (g.modality_check == "inconsistent") {
      rep.findings.push_back("modality label inconsistent at resolution 101: " +
                             std::to_string(g.minima) + " grid minima");
    }
    rep.grid = g;
  } else {
    rep.skipped.push_back("grid minima: dimension is not 2");
  }
  return rep;
}

}  // namespace optbench
