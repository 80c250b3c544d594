#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "optbench/core.hpp"

namespace optbench {

enum class OptimizerKind : std::uint8_t { random_search, nelder_mead, differential_evolution };

std::string_view to_string(OptimizerKind k);
// Accepts "random-search"/"rs", "nelder-mead"/"nm", "differential-evolution"/"de".
OptimizerKind parse_optimizer(std::string_view name);

struct NelderMeadParams {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  // Initial simplex offset per axis, as a fraction of the bound width.
  double initial_step = 0.05;
  double min_diameter = 1e-10;
};

struct DeParams {
  std::size_t population = 50;
  double F = 0.5;
  double CR = 0.9;
  // Generational replacement when true; otherwise a better trial replaces
  // its target at once and later mutations in the same sweep can use it.
  bool synchronous = false;
};

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::differential_evolution;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  NelderMeadParams nm;
  DeParams de;

  // Throws InvalidConfig.
  void validate() const;
};

struct HistoryPoint {
  std::uint64_t eval = 0;  // 1-based index of the evaluation that improved
  double best_f = 0.0;
};

struct OptRunResult {
  Vec best_x;
  double best_f = std::numeric_limits<double>::infinity();
  std::uint64_t evals_used = 0;
  std::vector<HistoryPoint> history;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
  // Evaluations that raised DomainError or returned NaN; scored as +inf.
  std::uint64_t domain_errors = 0;
};

// Objective seen by the optimizers. Throwing DomainError is allowed.
using Objective = std::function<double(std::span<const double>)>;

OptRunResult random_search(ProblemInstance& problem, const OptimizerConfig& config);
OptRunResult nelder_mead(ProblemInstance& problem, std::span<const double> x0,
                         const OptimizerConfig& config);
OptRunResult differential_evolution(ProblemInstance& problem, const OptimizerConfig& config);

// Nelder-Mead on an arbitrary objective; `widths` sets the initial simplex
// scale per axis.
OptRunResult nelder_mead(const Objective& f, std::span<const double> x0,
                         std::span<const double> widths, const OptimizerConfig& config);

// Dispatches on config.kind. Nelder-Mead starts from a uniform point drawn
// with the run seed.
OptRunResult run_optimizer(ProblemInstance& problem, const OptimizerConfig& config);

struct SuiteRun {
  std::string function;
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<OptRunResult> result;
  std::string error;  // set when the run failed
};

struct SuiteSummary {
  std::string function;
  std::size_t dim = 0;
  std::size_t runs = 0;  // successful runs
  std::size_t failures = 0;
  double mean = 0.0;
  double median = 0.0;
  double best = 0.0;
  double worst = 0.0;
  double mean_evals = 0.0;
};

struct SuiteTable {
  std::vector<SuiteRun> runs;  // one per (function, dim, trial)
  std::vector<SuiteSummary> summaries;  // one per (function, dim)
};

// Trial t of every (function, dim) uses seeds[t] as the optimizer seed and a
// problem seed derived from it, so stochastic entries are reproducible.
// `jobs` worker threads share the runs; the table does not depend on it.
SuiteTable run_suite(const OptimizerConfig& config, const std::vector<std::string>& functions,
                     const std::vector<std::size_t>& dims, std::size_t trials,
                     const std::vector<std::uint64_t>& seeds, std::size_t jobs = 1);

}  // namespace optbench
