#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optbench/core.hpp"

namespace optbench {

enum class Verdict : std::uint8_t { confirmed, refuted, inconclusive };
std::string_view to_string(Verdict v);

struct ClaimStatus {
  std::string claim;  // "optimum[k]" or a property name
  std::optional<OptimumRecord> record;
  Verdict verdict = Verdict::inconclusive;
  double claimed_value = 0.0;
  // f at the claimed location; NaN when the claim has no location or the
  // location is singular.
  double value_at_claim = 0.0;
  Vec best_x;
  double best_f = 0.0;
  double gap = 0.0;  // best_f - claimed_value
  // Set for refuted claims: a point strictly better than the claim, inside
  // the search region, re-checkable with one evaluation.
  std::optional<Vec> witness;
  double witness_f = 0.0;
  std::uint64_t budget_used = 0;
  std::string detail;
};

struct SeparabilityResult {
  bool separable = true;
  double max_mixed = 0.0;  // largest |d2f / dxi dxj| seen
  double max_abs_f = 0.0;
  double threshold = 0.0;  // tol * (1 + max_abs_f)
  std::size_t i = 0, j = 0;  // pair attaining max_mixed
  Vec witness;  // point attaining max_mixed
  std::uint64_t evaluations = 0;
};

struct SmoothnessReport {
  std::size_t points = 0;
  std::size_t nonfinite = 0;  // points with a non-finite or singular value
  std::size_t gradient_disagreements = 0;
  double max_relative_disagreement = 0.0;
  std::optional<Vec> nonfinite_witness;
  std::optional<Vec> gradient_witness;
  // Labels contradicted by the probe.
  bool continuity_flag = false;
  bool differentiability_flag = false;
};

struct GridProbe {
  std::size_t resolution = 0;
  std::size_t minima = 0;
  // "consistent" or "inconsistent" with the modality label at this
  // resolution, or "unlabelled".
  std::string modality_check;
};

struct VerificationReport {
  std::string function;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string timestamp;  // UTC, ISO 8601
  std::vector<ClaimStatus> claims;
  std::optional<SeparabilityResult> separability;
  std::string separability_check;  // against the label
  std::optional<SmoothnessReport> smoothness;
  std::optional<GridProbe> grid;
  // Probes that did not run and why.
  std::vector<std::string> skipped;
  std::vector<std::string> findings;
};

// Multistart refinement: 16 * dim Latin-hypercube starts plus the claimed
// location, Nelder-Mead from each with the budget split evenly. The search
// objective is f at the projection onto the bounds plus the squared distance
// to it, so every point it reports lies in the search region.
ClaimStatus verify_optimum(ProblemInstance& problem, const OptimumRecord& claim,
                           std::uint64_t budget, double tol, std::uint64_t seed);

// Central-difference mixed partials at random interior points.
SeparabilityResult test_separability(ProblemInstance& problem, std::size_t n_points, double h,
                                     double tol, std::uint64_t seed);

SmoothnessReport probe_smoothness(ProblemInstance& problem, std::size_t n_points,
                                  std::uint64_t seed);

// Interior points of a resolution x resolution grid over the bounds that are
// strictly below all 8 neighbours.
std::size_t count_grid_minima_2d(ProblemInstance& problem, std::size_t resolution);

// Dimension used for an entry when `requested` is not accepted: the fixed
// dimension, or the next accepted scalable dimension.
std::size_t effective_dimension(const FunctionMeta& meta, std::size_t requested);

VerificationReport full_report(std::string_view id, std::size_t dim, std::uint64_t seed,
                               std::uint64_t budget);

}  // namespace optbench
