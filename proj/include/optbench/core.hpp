#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "optbench/error.hpp"

namespace optbench {

using Vec = std::vector<double>;

// Randomness stream shared by every stochastic component. The engine state
// is the complete stream state; distributions are constructed per draw so
// nothing else needs to be carried across snapshots.
class Rng {
 public:
  using Engine = std::mt19937_64;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal(double mean, double stddev) {
    if (stddev == 0.0) return mean;
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  Engine& engine() { return engine_; }
  std::string state() const;
  void set_state(const std::string& text);

 private:
  Engine engine_;
};

// Derives an independent stream seed from a base seed and a label, so probes
// over different functions never share randomness.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

// Tri-state property label. The source labels many entries only partially;
// `unknown` records that no label was printed.
enum class Label : std::uint8_t { no, yes, unknown };

enum class Modality : std::uint8_t { unimodal, multimodal, unknown };

std::string_view to_string(Label l);
std::string_view to_string(Modality m);

struct PropertySet {
  Label continuous = Label::unknown;
  Label differentiable = Label::unknown;
  Label separable = Label::unknown;
  Label scalable = Label::unknown;
  Modality modality = Modality::unknown;
  bool stochastic = false;
  bool dynamic = false;
};

class Bounds {
 public:
  Bounds() = default;
  Bounds(Vec lower, Vec upper);
  static Bounds uniform(double lo, double hi, std::size_t dim);

  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  std::size_t dimension() const { return lower_.size(); }
  double width(std::size_t i) const { return upper_[i] - lower_[i]; }
  bool contains(std::span<const double> x) const;

 private:
  Vec lower_;
  Vec upper_;
};

// Default search region as published: either one interval broadcast to every
// coordinate or explicit per-coordinate intervals for fixed-dimension entries.
struct BoundsTemplate {
  Vec lower;
  Vec upper;
  // Interval is multiplied by d^dim_power, as in [-d, d] or [-d^2, d^2].
  int dim_power = 0;

  bool broadcast() const { return lower.size() == 1; }
  Bounds bind(std::size_t dim) const;
};

struct DimClass {
  enum class Kind : std::uint8_t { fixed, scalable };
  Kind kind = Kind::fixed;
  std::size_t n = 2;  // fixed dimension, or minimum dimension when scalable
  std::size_t step = 1;  // scalable dimensions are n, n + step, ...

  static DimClass fixed(std::size_t n) { return {Kind::fixed, n, 1}; }
  static DimClass scalable(std::size_t min_dim, std::size_t step = 1) {
    return {Kind::scalable, min_dim, step};
  }
  bool accepts(std::size_t dim) const;
};

enum class Provenance : std::uint8_t { paper_claimed, verified, both };
std::string_view to_string(Provenance p);

struct OptimumRecord {
  // Explicit minimizer; empty when the claim states only a value. When
  // `all_equal` is set the location is the single value repeated in every
  // coordinate.
  Vec location;
  bool all_equal = false;
  // value(n) = value + value_per_dim * n
  double value = 0.0;
  double value_per_dim = 0.0;
  Provenance provenance = Provenance::paper_claimed;
  std::size_t dimension = 0;  // 0 means "any"
  double tol = 1e-6;

  bool has_location() const { return !location.empty(); }
  bool applies_to(std::size_t dim) const { return dimension == 0 || dimension == dim; }
  Vec location_at(std::size_t dim) const;
  double value_at(std::size_t dim) const { return value + value_per_dim * double(dim); }
};

struct FunctionId {
  std::string canonical_name;
  std::vector<std::string> aliases;
};

struct ConstantTable;

struct FunctionMeta {
  FunctionId id;
  int equation = 0;  // 0 for entries without a printed equation number
  std::string title;
  PropertySet properties;
  BoundsTemplate default_bounds;
  std::vector<BoundsTemplate> alternative_bounds;
  DimClass dim_class;
  std::vector<OptimumRecord> optima;
  int tier = 2;
  std::string tier_reason;  // required for tier 3
  std::vector<std::string> constants;  // ConstantTable names
  std::vector<std::string> discrepancy_notes;
  bool simplified_transforms = false;
};

struct CatalogEntry;

// Arguments handed to an entry's evaluation rule.
struct EvalArgs {
  std::span<const double> x;
  std::span<const double> params;
  Rng* rng = nullptr;  // non-null only for stochastic entries
};

// Evaluation rule that carries state across calls (the drifting functions).
// A ProblemInstance of such an entry owns one object built by the factory.
class StatefulBody {
 public:
  virtual ~StatefulBody() = default;
  virtual double evaluate(std::span<const double> x) = 0;
  virtual std::unique_ptr<StatefulBody> clone() const = 0;
};

class ProblemInstance {
 public:
  ProblemInstance(const CatalogEntry& entry, std::size_t dimension, Bounds bounds,
                  std::optional<std::uint64_t> seed);
  ProblemInstance(const ProblemInstance& other);
  ProblemInstance& operator=(const ProblemInstance& other);

  const FunctionMeta& meta() const;
  const CatalogEntry& entry() const { return *entry_; }
  std::size_t dimension() const { return dimension_; }
  const Bounds& bounds() const { return bounds_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  bool stochastic() const;
  // Non-null for drifting entries.
  StatefulBody* state() { return state_.get(); }

  double evaluate(std::span<const double> x);
  std::uint64_t evaluations() const { return evals_.load(std::memory_order_relaxed); }
  void reset_counter() { evals_.store(0, std::memory_order_relaxed); }

 private:
  const CatalogEntry* entry_;
  std::size_t dimension_;
  Bounds bounds_;
  std::optional<std::uint64_t> seed_;
  Vec params_;
  std::optional<Rng> rng_;
  std::unique_ptr<StatefulBody> state_;
  std::atomic<std::uint64_t> evals_{0};
};

ProblemInstance make_problem(std::string_view id, std::size_t dimension,
                             std::optional<std::uint64_t> seed = std::nullopt,
                             std::optional<Bounds> bounds_override = std::nullopt);

double evaluate(ProblemInstance& problem, std::span<const double> x);

// Central-difference gradient; component i is
// (f(x + h e_i) - f(x - h e_i)) / (2h).
Vec gradient_fd(ProblemInstance& problem, std::span<const double> x, double h);

Vec sample_uniform(const Bounds& bounds, Rng& stream);

}  // namespace optbench
