#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <string>

#include "optbench/core.hpp"

namespace optbench {

enum class DynamicKind : std::uint8_t { ddb, cddb };

std::string_view to_string(DynamicKind k);

struct HistoryItem {
  Vec x;
  double f = 0.0;
};

inline constexpr double kDdbNoiseSd = 0.1;
inline constexpr double kSaturation = 1e308;

// Noise-free landscapes at a given theta. cddb_value sets *saturated when the
// result was clamped to +-1e308.
double ddb_value(std::span<const double> x, std::span<const double> theta);
double cddb_value(std::span<const double> x, std::span<const double> theta,
                  bool* saturated = nullptr);

class DynamicSession {
 public:
  DynamicSession(DynamicKind kind, std::size_t dimension, std::uint64_t seed,
                 double step_sigma = 0.05, std::size_t history_capacity = 32);

  DynamicKind kind() const { return kind_; }
  std::size_t dimension() const { return theta_.size(); }
  const Vec& theta() const { return theta_; }
  double step_sigma() const { return step_sigma_; }
  std::size_t history_capacity() const { return capacity_; }
  const std::deque<HistoryItem>& history() const { return history_; }
  std::uint64_t eval_count() const { return eval_count_; }
  const Bounds& bounds() const { return bounds_; }
  // True when the most recent evaluation was clamped.
  bool saturated() const { return saturated_; }

  // Test mode: evaluations add no noise but still advance the walk.
  void suppress_noise(bool on) { noise_suppressed_ = on; }
  bool noise_suppressed() const { return noise_suppressed_; }

  // One random-walk step on theta.
  void step_state();

  double eval_ddb(std::span<const double> x);
  double eval_cddb(std::span<const double> x);
  double evaluate(std::span<const double> x);

  // Noise standard deviation the next evaluation would use.
  double noise_amplitude() const;

  // Appends to the history buffer as an evaluation would.
  void push_history(Vec x, double f);

  std::string snapshot() const;
  static DynamicSession restore(const std::string& blob);

 private:
  DynamicSession() = default;
  void check_input(std::span<const double> x) const;

  DynamicKind kind_ = DynamicKind::ddb;
  Vec theta_;
  double step_sigma_ = 0.05;
  std::size_t capacity_ = 32;
  std::deque<HistoryItem> history_;
  Rng rng_;
  std::uint64_t eval_count_ = 0;
  Bounds bounds_;
  bool noise_suppressed_ = false;
  bool saturated_ = false;
};

DynamicSession init_session(DynamicKind kind, std::size_t dimension, std::uint64_t seed,
                            double step_sigma = 0.05, std::size_t history_capacity = 32);

// Adapter so a catalog ProblemInstance can own a session.
std::unique_ptr<StatefulBody> make_dynamic_body(DynamicKind kind, std::size_t dimension,
                                                std::uint64_t seed);

}  // namespace optbench
