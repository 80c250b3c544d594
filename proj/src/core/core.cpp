#include "optbench/core.hpp"

#include <cmath>
#include <sstream>

#include "optbench/catalog.hpp"

namespace optbench {

std::string Rng::state() const {
  std::ostringstream out;
  out << engine_;
  return out.str();
}

void Rng::set_state(const std::string& text) {
  std::istringstream in(text);
  Engine e;
  in >> e;
  if (in.fail()) raise(ErrorCode::CorruptSnapshot, "unreadable random stream state");
  engine_ = e;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(base ^ splitmix64(h));
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::no: return "no";
    case Label::yes: return "yes";
    case Label::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Modality m) {
  switch (m) {
    case Modality::unimodal: return "unimodal";
    case Modality::multimodal: return "multimodal";
    case Modality::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_claimed: return "paper-claimed";
    case Provenance::verified: return "verified";
    case Provenance::both: return "both";
  }
  return "paper-claimed";
}

Bounds::Bounds(Vec lower, Vec upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    raise(ErrorCode::InvalidBounds, "bounds need equal, non-zero lengths");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i])) {
      raise(ErrorCode::InvalidBounds, "bounds need finite lower < upper in coordinate " +
                                          std::to_string(i));
    }
  }
}

Bounds Bounds::uniform(double lo, double hi, std::size_t dim) {
  return Bounds(Vec(dim, lo), Vec(dim, hi));
}

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

Bounds BoundsTemplate::bind(std::size_t dim) const {
  if (broadcast()) {
    const double s = std::pow(double(dim), dim_power);
    return Bounds::uniform(lower[0] * s, upper[0] * s, dim);
  }
  if (lower.size() != dim) {
    raise(ErrorCode::DimensionMismatch, "bounds are defined for dimension " +
                                            std::to_string(lower.size()));
  }
  return Bounds(lower, upper);
}

bool DimClass::accepts(std::size_t dim) const {
  if (kind == Kind::fixed) return dim == n;
  return dim >= n && (dim - n) % step == 0;
}

Vec OptimumRecord::location_at(std::size_t dim) const {
  if (all_equal && !location.empty()) return Vec(dim, location[0]);
  return location;
}

ProblemInstance::ProblemInstance(const CatalogEntry& entry, std::size_t dimension,
                                 Bounds bounds, std::optional<std::uint64_t> seed)
    : entry_(&entry), dimension_(dimension), bounds_(std::move(bounds)), seed_(seed) {
  for (const Param& p : entry.params) params_.push_back(p.value);
  if (entry.meta.properties.stochastic) {
    if (!seed) raise(ErrorCode::MissingSeed, entry.meta.id.canonical_name + " needs a seed");
    rng_.emplace(*seed);
    if (entry.make_state) state_ = entry.make_state(dimension, *seed);
  }
}

ProblemInstance::ProblemInstance(const ProblemInstance& o)
    : entry_(o.entry_),
      dimension_(o.dimension_),
      bounds_(o.bounds_),
      seed_(o.seed_),
      params_(o.params_),
      rng_(o.rng_),
      state_(o.state_ ? o.state_->clone() : nullptr),
      evals_(o.evals_.load(std::memory_order_relaxed)) {}

ProblemInstance& ProblemInstance::operator=(const ProblemInstance& o) {
  if (this == &o) return *this;
  entry_ = o.entry_;
  dimension_ = o.dimension_;
  bounds_ = o.bounds_;
  seed_ = o.seed_;
  params_ = o.params_;
  rng_ = o.rng_;
  state_ = o.state_ ? o.state_->clone() : nullptr;
  evals_.store(o.evals_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

const FunctionMeta& ProblemInstance::meta() const { return entry_->meta; }

bool ProblemInstance::stochastic() const { return entry_->meta.properties.stochastic; }

double ProblemInstance::evaluate(std::span<const double> x) {
  if (x.size() != dimension_) {
    raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(dimension_) +
                                            " coordinates, got " + std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteInput, "input has a non-finite coordinate");
  }
  evals_.fetch_add(1, std::memory_order_relaxed);
  if (state_) return state_->evaluate(x);
  return entry_->body(EvalArgs{x, params_, rng_ ? &*rng_ : nullptr});
}

ProblemInstance make_problem(std::string_view id, std::size_t dimension,
                             std::optional<std::uint64_t> seed,
                             std::optional<Bounds> bounds_override) {
  const CatalogEntry& e = catalog().lookup(id);
  const FunctionMeta& m = e.meta;
  if (!e.evaluable()) {
    raise(ErrorCode::Tier3Unimplementable, m.id.canonical_name + ": " + m.tier_reason);
  }
  if (dimension == 0 || !m.dim_class.accepts(dimension)) {
    raise(ErrorCode::DimensionMismatch,
          m.id.canonical_name + " does not accept dimension " + std::to_string(dimension));
  }
  Bounds b = bounds_override ? *bounds_override : m.default_bounds.bind(dimension);
  if (b.dimension() != dimension) {
    raise(ErrorCode::DimensionMismatch, "bounds length differs from the dimension");
  }
  if (!m.properties.stochastic) seed.reset();
  return ProblemInstance(e, dimension, std::move(b), seed);
}

double evaluate(ProblemInstance& problem, std::span<const double> x) {
  return problem.evaluate(x);
}

Vec gradient_fd(ProblemInstance& problem, std::span<const double> x, double h) {
  if (problem.stochastic()) {
    raise(ErrorCode::StochasticGradientUnsupported,
          problem.meta().id.canonical_name + " is stochastic");
  }
  if (!(h > 0.0)) raise(ErrorCode::InvalidConfig, "step h must be positive");
  Vec p(x.begin(), x.end());
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = p[i];
    p[i] = xi + h;
    const double fp = problem.evaluate(p);
    p[i] = xi - h;
    const double fm = problem.evaluate(p);
    p[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Vec sample_uniform(const Bounds& bounds, Rng& stream) {
  Vec x(bounds.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = stream.uniform(bounds.lower()[i], bounds.upper()[i]);
  }
  return x;
}

}  // namespace optbench
