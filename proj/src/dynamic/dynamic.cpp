#include "optbench/dynamic.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace optbench {

std::string_view to_string(DynamicKind k) { return k == DynamicKind::ddb ? "ddb" : "cddb"; }

double ddb_value(std::span<const double> x, std::span<const double> theta) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - theta[i]) * (x[i] - theta[i]);
  return std::sin(x[0] + theta[0]) * std::cos(x[1] + theta[1]) * std::exp(-d2);
}

namespace {

// sign(b) |b|^p, with 0^0 = 1.
double signpow(double b, double p) {
  if (b == 0.0) return p == 0.0 ? 1.0 : (p > 0.0 ? 0.0 : HUGE_VAL);
  const double m = std::pow(std::fabs(b), p);
  return b < 0.0 ? -m : m;
}

double saturate(double v, bool* flag) {
  bool hit = false;
  if (std::isnan(v)) {
    v = kSaturation;
    hit = true;
  } else if (v > kSaturation) {
    v = kSaturation;
    hit = true;
  } else if (v < -kSaturation) {
    v = -kSaturation;
    hit = true;
  }
  if (flag) *flag = hit;
  return v;
}

}  // namespace

double cddb_value(std::span<const double> x, std::span<const double> theta, bool* saturated) {
  const double n = double(x.size());
  double s = 0.0, damped = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = theta[i], xi = x[i];
    s += t * t * t * xi * xi * xi;
    s += std::sin(xi + t);
    s += t == 0.0 ? 0.0 : t * signpow(xi, t + n);
    damped += xi == 0.0 && t == 0.0 ? 1.0 : std::pow(std::fabs(xi), 2.0 * t);
  }
  // Scaling once keeps f(0) at theta = 0 exactly 0.1 n.
  return saturate(s + 0.1 * damped, saturated);
}

DynamicSession::DynamicSession(DynamicKind kind, std::size_t dimension, std::uint64_t seed,
                               double step_sigma, std::size_t history_capacity)
    : kind_(kind), step_sigma_(step_sigma), capacity_(history_capacity), rng_(seed) {
  if (dimension == 0 || (kind == DynamicKind::ddb && dimension < 2)) {
    raise(ErrorCode::BadDimension, std::string(to_string(kind)) + " does not accept dimension " +
                                       std::to_string(dimension));
  }
  if (!(step_sigma >= 0.0) || !std::isfinite(step_sigma)) {
    raise(ErrorCode::InvalidConfig, "step_sigma must be finite and non-negative");
  }
  if (history_capacity == 0) raise(ErrorCode::InvalidConfig, "history capacity must be positive");
  theta_.assign(dimension, 0.0);
  bounds_ = Bounds::uniform(-5.0, 5.0, dimension);
}

void DynamicSession::step_state() {
  for (double& t : theta_) t += rng_.normal(0.0, step_sigma_);
}

void DynamicSession::check_input(std::span<const double> x) const {
  if (x.size() != theta_.size()) {
    raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(theta_.size()) +
                                            " coordinates, got " + std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteInput, "input has a non-finite coordinate");
  }
}

double DynamicSession::eval_ddb(std::span<const double> x) {
  if (kind_ != DynamicKind::ddb) raise(ErrorCode::InvalidConfig, "session is not ddb");
  check_input(x);
  double f = ddb_value(x, theta_);
  if (!noise_suppressed_) f += rng_.normal(0.0, kDdbNoiseSd);
  saturated_ = false;
  push_history(Vec(x.begin(), x.end()), f);
  step_state();
  ++eval_count_;
  return f;
}

double DynamicSession::noise_amplitude() const {
  double mean = 0.0;
  if (!history_.empty()) {
    for (const HistoryItem& h : history_) mean += h.f;
    mean /= double(history_.size());
  }
  return 0.1 * (1.0 + std::fabs(std::sin(mean)));
}

double DynamicSession::eval_cddb(std::span<const double> x) {
  if (kind_ != DynamicKind::cddb) raise(ErrorCode::InvalidConfig, "session is not cddb");
  check_input(x);
  bool sat = false;
  double f = cddb_value(x, theta_, &sat);
  if (!noise_suppressed_) {
    bool sat2 = false;
    f = saturate(f + rng_.normal(0.0, noise_amplitude()), &sat2);
    sat = sat || sat2;
  }
  saturated_ = sat;
  push_history(Vec(x.begin(), x.end()), f);
  step_state();
  ++eval_count_;
  return f;
}

double DynamicSession::evaluate(std::span<const double> x) {
  return kind_ == DynamicKind::ddb ? eval_ddb(x) : eval_cddb(x);
}

void DynamicSession::push_history(Vec x, double f) {
  history_.push_back(HistoryItem{std::move(x), f});
  while (history_.size() > capacity_) history_.pop_front();
}

// Text format, one record per line; doubles are written as hex floats so the
// round trip is bit-exact.
namespace {

constexpr const char* kMagic = "optbench-dynamic-session";
constexpr int kVersion = 1;

std::string hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double read_double(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) raise(ErrorCode::CorruptSnapshot, "snapshot truncated");
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size()) raise(ErrorCode::CorruptSnapshot, "bad number: " + tok);
  return v;
}

std::uint64_t read_uint(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) raise(ErrorCode::CorruptSnapshot, "snapshot truncated");
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    raise(ErrorCode::CorruptSnapshot, "bad integer: " + tok);
  }
  return v;
}

void expect(std::istream& in, std::string_view key) {
  std::string tok;
  if (!(in >> tok) || tok != key) {
    raise(ErrorCode::CorruptSnapshot, "expected '" + std::string(key) + "'");
  }
}

}  // namespace

std::string DynamicSession::snapshot() const {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << '\n';
  out << "kind " << to_string(kind_) << '\n';
  out << "dimension " << theta_.size() << '\n';
  out << "step_sigma " << hex(step_sigma_) << '\n';
  out << "capacity " << capacity_ << '\n';
  out << "eval_count " << eval_count_ << '\n';
  out << "noise_suppressed " << (noise_suppressed_ ? 1 : 0) << '\n';
  out << "saturated " << (saturated_ ? 1 : 0) << '\n';
  out << "theta";
  for (double t : theta_) out << ' ' << hex(t);
  out << '\n';
  out << "history " << history_.size() << '\n';
  for (const HistoryItem& h : history_) {
    for (double v : h.x) out << hex(v) << ' ';
    out << hex(h.f) << '\n';
  }
  out << "stream " << rng_.state() << '\n';
  out << "end\n";
  return out.str();
}

DynamicSession DynamicSession::restore(const std::string& blob) {
  std::istringstream in(blob);
  expect(in, kMagic);
  if (read_uint(in) != kVersion) raise(ErrorCode::CorruptSnapshot, "unsupported version");
  DynamicSession s;
  expect(in, "kind");
  std::string kind;
  in >> kind;
  if (kind == "ddb") s.kind_ = DynamicKind::ddb;
  else if (kind == "cddb") s.kind_ = DynamicKind::cddb;
  else raise(ErrorCode::CorruptSnapshot, "unknown kind: " + kind);
  expect(in, "dimension");
  const std::uint64_t dim = read_uint(in);
  if (dim == 0 || dim > (1u << 20) || (s.kind_ == DynamicKind::ddb && dim < 2)) {
    raise(ErrorCode::CorruptSnapshot, "bad dimension");
  }
  expect(in, "step_sigma");
  s.step_sigma_ = read_double(in);
  expect(in, "capacity");
  s.capacity_ = read_uint(in);
  if (s.capacity_ == 0) raise(ErrorCode::CorruptSnapshot, "bad capacity");
  expect(in, "eval_count");
  s.eval_count_ = read_uint(in);
  expect(in, "noise_suppressed");
  s.noise_suppressed_ = read_uint(in) != 0;
  expect(in, "saturated");
  s.saturated_ = read_uint(in) != 0;
  expect(in, "theta");
  s.theta_.resize(dim);
  for (double& t : s.theta_) t = read_double(in);
  expect(in, "history");
  const std::uint64_t n = read_uint(in);
  if (n > s.capacity_) raise(ErrorCode::CorruptSnapshot, "history longer than capacity");
  for (std::uint64_t i = 0; i < n; ++i) {
    HistoryItem h;
    h.x.resize(dim);
    for (double& v : h.x) v = read_double(in);
    h.f = read_double(in);
    s.history_.push_back(std::move(h));
  }
  expect(in, "stream");
  std::string state;
  std::getline(in, state);
  s.rng_.set_state(state);
  expect(in, "end");
  s.bounds_ = Bounds::uniform(-5.0, 5.0, dim);
  return s;
}

DynamicSession init_session(DynamicKind kind, std::size_t dimension, std::uint64_t seed,
                            double step_sigma, std::size_t history_capacity) {
  return DynamicSession(kind, dimension, seed, step_sigma, history_capacity);
}

namespace {

class DynamicBody final : public StatefulBody {
 public:
  explicit DynamicBody(DynamicSession s) : session_(std::move(s)) {}
  double evaluate(std::span<const double> x) override { return session_.evaluate(x); }
  std::unique_ptr<StatefulBody> clone() const override {
    return std::make_unique<DynamicBody>(session_);
  }
  DynamicSession& session() { return session_; }

 private:
  DynamicSession session_;
};

}  // namespace

std::unique_ptr<StatefulBody> make_dynamic_body(DynamicKind kind, std::size_t dimension,
                                                std::uint64_t seed) {
  return std::make_unique<DynamicBody>(DynamicSession(kind, dimension, seed));
}

}  // namespace optbench
