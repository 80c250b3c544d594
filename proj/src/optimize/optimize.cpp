#include "optbench/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "optbench/catalog.hpp"

namespace optbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Counts evaluations against the budget and keeps the incumbent. A
// DomainError or NaN scores +inf so the search can continue around it.
class Tracker {
 public:
  Tracker(const Objective& f, std::uint64_t budget, OptRunResult& r)
      : f_(f), budget_(budget), r_(r) {}

  bool exhausted() const { return r_.evals_used >= budget_; }

  double operator()(std::span<const double> x) {
    for (double v : x) {
      if (!std::isfinite(v)) return kInf;
    }
    ++r_.evals_used;
    double v;
    try {
      v = f_(x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DomainError) throw;
      v = kInf;
      ++r_.domain_errors;
    }
    if (std::isnan(v)) {
      v = kInf;
      ++r_.domain_errors;
    }
    if (r_.best_x.empty() || v < r_.best_f) {
      r_.best_f = v;
      r_.best_x.assign(x.begin(), x.end());
      r_.history.push_back({r_.evals_used, v});
    }
    return v;
  }

 private:
  const Objective& f_;
  std::uint64_t budget_;
  OptRunResult& r_;
};

Objective bind(ProblemInstance& problem) {
  return [&problem](std::span<const double> x) { return problem.evaluate(x); };
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_finite(const Bounds& b) {
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (!std::isfinite(b.lower()[i]) || !std::isfinite(b.upper()[i])) {
      raise(ErrorCode::InvalidBounds, "optimizer needs finite bounds");
    }
  }
}

// Folds v back into [lo, hi] by mirroring at the walls.
double reflect(double v, double lo, double hi) {
  const double w = hi - lo;
  if (w <= 0.0) return lo;
  if (v >= lo && v <= hi) return v;
  double t = std::fmod(v - lo, 2.0 * w);
  if (t < 0.0) t += 2.0 * w;
  v = t <= w ? lo + t : lo + 2.0 * w - t;
  return std::clamp(v, lo, hi);
}

double distance(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

std::string_view to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::random_search: return "random-search";
    case OptimizerKind::nelder_mead: return "nelder-mead";
    case OptimizerKind::differential_evolution: return "differential-evolution";
  }
  return "?";
}

OptimizerKind parse_optimizer(std::string_view name) {
  if (name == "random-search" || name == "rs") return OptimizerKind::random_search;
  if (name == "nelder-mead" || name == "nm") return OptimizerKind::nelder_mead;
  if (name == "differential-evolution" || name == "de") {
    return OptimizerKind::differential_evolution;
  }
  raise(ErrorCode::InvalidConfig, "unknown optimizer: " + std::string(name));
}

void OptimizerConfig::validate() const {
  if (budget == 0) raise(ErrorCode::InvalidConfig, "budget must be positive");
  if (kind == OptimizerKind::differential_evolution) {
    if (de.population < 4) raise(ErrorCode::InvalidConfig, "population must be at least 4");
    if (!(de.F > 0.0 && de.F <= 2.0)) raise(ErrorCode::InvalidConfig, "F must lie in (0, 2]");
    if (!(de.CR >= 0.0 && de.CR <= 1.0)) raise(ErrorCode::InvalidConfig, "CR must lie in [0, 1]");
  }
  if (kind == OptimizerKind::nelder_mead) {
    if (!(nm.reflection > 0.0) || !(nm.expansion > 1.0) || !(nm.contraction > 0.0 && nm.contraction < 1.0) ||
        !(nm.shrink > 0.0 && nm.shrink < 1.0) || !(nm.initial_step > 0.0) || !(nm.min_diameter >= 0.0)) {
      raise(ErrorCode::InvalidConfig, "invalid Nelder-Mead coefficients");
    }
  }
}

OptRunResult random_search(ProblemInstance& problem, const OptimizerConfig& config) {
  config.validate();
  require_finite(problem.bounds());
  Stopwatch clock;
  OptRunResult r;
  r.seed = config.seed;
  const Objective f = bind(problem);
  Tracker track(f, config.budget, r);
  Rng rng(config.seed);
  while (!track.exhausted()) track(sample_uniform(problem.bounds(), rng));
  r.wall_time = clock.seconds();
  return r;
}

OptRunResult nelder_mead(const Objective& f, std::span<const double> x0,
                         std::span<const double> widths, const OptimizerConfig& config) {
  config.validate();
  const std::size_t n = x0.size();
  if (n == 0 || widths.size() != n) raise(ErrorCode::DimensionMismatch, "bad start point");
  for (double v : x0) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteInput, "start point is not finite");
  }
  const NelderMeadParams& p = config.nm;
  Stopwatch clock;
  OptRunResult r;
  r.seed = config.seed;
  Tracker track(f, config.budget, r);

  std::vector<Vec> v(n + 1, Vec(x0.begin(), x0.end()));
  Vec fv(n + 1, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    double step = p.initial_step * widths[i];
    if (!(std::isfinite(step) && step > 0.0)) step = p.initial_step * std::max(1.0, std::fabs(x0[i]));
    v[i + 1][i] += step;
  }
  for (std::size_t i = 0; i <= n && !track.exhausted(); ++i) fv[i] = track(v[i]);

  std::vector<std::size_t> order(n + 1);
  Vec c(n), xr(n), xe(n), xc(n);
  const std::uint64_t max_iter = 10 * config.budget + 100;
  for (std::uint64_t iter = 0; iter < max_iter && !track.exhausted(); ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<Vec> sv(n + 1);
    Vec sf(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      sv[i] = std::move(v[order[i]]);
      sf[i] = fv[order[i]];
    }
    v = std::move(sv);
    fv = std::move(sf);

    double diam = 0.0;
    for (std::size_t i = 1; i <= n; ++i) diam = std::max(diam, distance(v[i], v[0]));
    if (diam < p.min_diameter) break;

    std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[j] += v[i][j] / double(n);
    }
    const Vec& w = v[n];
    for (std::size_t j = 0; j < n; ++j) xr[j] = c[j] + p.reflection * (c[j] - w[j]);
    const double fr = track(xr);

    if (fr < fv[0]) {
      if (track.exhausted()) {
        v[n] = xr;
        fv[n] = fr;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) xe[j] = c[j] + p.expansion * (xr[j] - c[j]);
      const double fe = track(xe);
      if (fe < fr) {
        v[n] = xe;
        fv[n] = fe;
      } else {
        v[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      v[n] = xr;
      fv[n] = fr;
      continue;
    }
    if (track.exhausted()) break;
    const bool outside = fr < fv[n];
    for (std::size_t j = 0; j < n; ++j) {
      xc[j] = outside ? c[j] + p.contraction * (xr[j] - c[j]) : c[j] + p.contraction * (w[j] - c[j]);
    }
    const double fc = track(xc);
    if (outside ? fc <= fr : fc < fv[n]) {
      v[n] = xc;
      fv[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n && !track.exhausted(); ++i) {
      for (std::size_t j = 0; j < n; ++j) v[i][j] = v[0][j] + p.shrink * (v[i][j] - v[0][j]);
      fv[i] = track(v[i]);
    }
  }
  r.wall_time = clock.seconds();
  return r;
}

OptRunResult nelder_mead(ProblemInstance& problem, std::span<const double> x0,
                         const OptimizerConfig& config) {
  const Bounds& b = problem.bounds();
  Vec widths(b.dimension());
  for (std::size_t i = 0; i < widths.size(); ++i) widths[i] = b.width(i);
  if (x0.size() != problem.dimension()) {
    raise(ErrorCode::DimensionMismatch, "start point has the wrong dimension");
  }
  return nelder_mead(bind(problem), x0, widths, config);
}

OptRunResult differential_evolution(ProblemInstance& problem, const OptimizerConfig& config) {
  config.validate();
  const Bounds& b = problem.bounds();
  require_finite(b);
  Stopwatch clock;
  OptRunResult r;
  r.seed = config.seed;
  const Objective f = bind(problem);
  Tracker track(f, config.budget, r);
  Rng rng(config.seed);

  const std::size_t np = config.de.population;
  const std::size_t n = problem.dimension();
  std::vector<Vec> pop;
  Vec fit;
  pop.reserve(np);
  for (std::size_t i = 0; i < np && !track.exhausted(); ++i) {
    pop.push_back(sample_uniform(b, rng));
    fit.push_back(track(pop.back()));
  }
  if (pop.size() < np) {
    r.wall_time = clock.seconds();
    return r;
  }

  std::vector<Vec> trial(np, Vec(n));
  Vec trial_f(np, kInf);
  std::vector<bool> done(np);
  while (!track.exhausted()) {
    std::fill(done.begin(), done.end(), false);
    for (std::size_t i = 0; i < np && !track.exhausted(); ++i) {
      std::size_t a, bb, cc;
      do a = rng.index(np); while (a == i);
      do bb = rng.index(np); while (bb == i || bb == a);
      do cc = rng.index(np); while (cc == i || cc == a || cc == bb);
      const std::size_t jrand = rng.index(n);
      for (std::size_t j = 0; j < n; ++j) {
        const bool cross = rng.uniform(0.0, 1.0) < config.de.CR || j == jrand;
        double u = cross ? pop[a][j] + config.de.F * (pop[bb][j] - pop[cc][j]) : pop[i][j];
        trial[i][j] = reflect(u, b.lower()[j], b.upper()[j]);
      }
      trial_f[i] = track(trial[i]);
      done[i] = true;
      if (!config.de.synchronous && trial_f[i] <= fit[i]) {
        pop[i] = trial[i];
        fit[i] = trial_f[i];
        done[i] = false;
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      if (done[i] && trial_f[i] <= fit[i]) {
        pop[i] = trial[i];
        fit[i] = trial_f[i];
      }
    }
  }
  r.wall_time = clock.seconds();
  return r;
}

OptRunResult run_optimizer(ProblemInstance& problem, const OptimizerConfig& config) {
  switch (config.kind) {
    case OptimizerKind::random_search: return random_search(problem, config);
    case OptimizerKind::differential_evolution: return differential_evolution(problem, config);
    case OptimizerKind::nelder_mead: {
      require_finite(problem.bounds());
      Rng rng(derive_seed(config.seed, "nelder-mead-start"));
      const Vec x0 = sample_uniform(problem.bounds(), rng);
      return nelder_mead(problem, x0, config);
    }
  }
  raise(ErrorCode::InvalidConfig, "unknown optimizer");
}

SuiteTable run_suite(const OptimizerConfig& config, const std::vector<std::string>& functions,
                     const std::vector<std::size_t>& dims, std::size_t trials,
                     const std::vector<std::uint64_t>& seeds, std::size_t jobs) {
  config.validate();
  if (seeds.size() < trials) {
    raise(ErrorCode::InvalidConfig, "need one seed per trial: " + std::to_string(trials) +
                                        " trials, " + std::to_string(seeds.size()) + " seeds");
  }
  SuiteTable table;
  for (const std::string& fn : functions) {
    const CatalogEntry* e = catalog().find(fn);
    const std::string name = e ? e->meta.id.canonical_name : fn;
    for (std::size_t d : dims) {
      for (std::size_t t = 0; t < trials; ++t) table.runs.push_back({name, d, t, seeds[t], {}, {}});
    }
  }

  auto work = [&](SuiteRun& run) {
    try {
      ProblemInstance problem = make_problem(run.function, run.dim, derive_seed(run.seed, run.function));
      OptimizerConfig c = config;
      c.seed = run.seed;
      run.result = run_optimizer(problem, c);
    } catch (const std::exception& ex) {
      run.error = ex.what();
    }
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < table.runs.size(); i = next++) work(table.runs[i]);
  };
  const std::size_t nthreads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, table.runs.size()));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < table.runs.size();) {
    SuiteSummary s;
    s.function = table.runs[i].function;
    s.dim = table.runs[i].dim;
    Vec vals;
    double evals = 0.0;
    std::size_t j = i;
    for (; j < table.runs.size() && table.runs[j].function == s.function && table.runs[j].dim == s.dim; ++j) {
      const SuiteRun& run = table.runs[j];
      if (!run.result) {
        ++s.failures;
        continue;
      }
      vals.push_back(run.result->best_f);
      evals += double(run.result->evals_used);
    }
    s.runs = vals.size();
    if (!vals.empty()) {
      std::sort(vals.begin(), vals.end());
      s.best = vals.front();
      s.worst = vals.back();
      s.mean = std::accumulate(vals.begin(), vals.end(), 0.0) / double(vals.size());
      const std::size_t m = vals.size() / 2;
      s.median = vals.size() % 2 ? vals[m] : 0.5 * (vals[m - 1] + vals[m]);
      s.mean_evals = evals / double(vals.size());
    }
    table.summaries.push_back(s);
    i = j;
  }
  return table;
}

}  // namespace optbench
