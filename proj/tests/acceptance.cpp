// Acceptance checks. Usage: acceptance <optbench-cli> [criterion...]
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "optbench/catalog.hpp"
#include "optbench/dynamic.hpp"
#include "optbench/io.hpp"

using namespace optbench;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_tmp;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  std::string failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures += "; failed: " + what;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double eval_at(const std::string& name, const Vec& x) {
  ProblemInstance p = make_problem(name, x.size());
  return p.evaluate(x);
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " --out \"" + out.string() + "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

void strip_key(Json& j, const std::string& key) {
  if (j.is_object()) {
    j.erase(key);
    for (auto& [k, v] : j.items()) strip_key(v, key);
  } else if (j.is_array()) {
    for (auto& v : j) strip_key(v, key);
  }
}

void exact_optima(Check& c) {
  const double pi = std::acos(-1.0);
  const std::vector<std::tuple<std::string, Vec, double>> cases = {
      {"sphere", {0, 0, 0}, 0.0},        {"rastrigin", {0, 0, 0}, 0.0},
      {"ackley", {0, 0, 0}, 0.0},        {"griewank", {0, 0, 0}, 0.0},
      {"booth", {1, 3}, 0.0},            {"rosenbrock", {1, 1}, 0.0},
      {"beale", {3, 0.5}, 0.0},          {"matyas", {0, 0}, 0.0},
      {"easom", {pi, pi}, -1.0},         {"goldstein-price", {0, -1}, 3.0},
      {"levy-n13", {1, 1}, 0.0},         {"zakharov", {0, 0, 0}, 0.0},
  };
  double worst = 0.0;
  for (const auto& [name, x, v] : cases) {
    const double err = std::fabs(eval_at(name, x) - v);
    worst = std::max(worst, err);
    c.expect(err <= 1e-9, name + " off by " + fmt(err));
  }
  c.detail << cases.size() << " entries, max error " << fmt(worst);
}

void rounded_optima(Check& c) {
  auto near = [&](const std::string& name, const Vec& x, double v, double tol) {
    const double f = eval_at(name, x);
    c.expect(std::fabs(f - v) <= tol, name + " f=" + fmt(f));
  };
  near("six-hump-camel", {0.0898, -0.7126}, -1.0316, 1e-3);
  near("six-hump-camel", {-0.0898, 0.7126}, -1.0316, 1e-3);
  for (std::size_t n : {2u, 5u}) near("styblinski-tang", Vec(n, -2.9035), -39.16599 * double(n), 1e-3);
  near("holder-table", {8.055, 9.664}, -19.2085, 1e-3);
  near("mccormick", {-0.54719, -1.54719}, -1.9132, 1e-3);
  near("cross-in-tray", {1.34941, 1.34941}, -2.06261, 1e-3);
  for (std::size_t n : {2u, 5u}) near("schwefel", Vec(n, 420.9687), 0.0, 1e-3 * double(n));

  OptimumRecord r;
  r.value = -1.8013;
  r.tol = 1e-3;
  ProblemInstance p = make_problem("michalewicz", 2);
  const ClaimStatus s = verify_optimum(p, r, 20000, 1e-3, 1);
  c.expect(s.best_f <= -1.8013 + 1e-3, "michalewicz best " + fmt(s.best_f));
  c.detail << "michalewicz multistart best " << fmt(s.best_f);
}

void discrepancy_ledger(Check& c) {
  const fs::path out = g_tmp / "ledger.json";
  const int rc = run_cli("verify --all --dim 2 --budget 10000 --seed 1", out);
  c.expect(rc == 0, "exit code " + std::to_string(rc));
  if (rc != 0) return;
  const Json doc = read_json(out);
  auto refuted_with_witness = [&](const std::string& fn) {
    for (const Json& r : doc.at("refuted")) {
      if (r.at("function") != fn || r.at("witness").is_null()) continue;
      const Vec w = r.at("witness").get<Vec>();
      const double f = eval_at(fn, w);
      return std::make_pair(true, f);
    }
    return std::make_pair(false, 0.0);
  };
  const auto [dw, dw_f] = refuted_with_witness("drop-wave");
  c.expect(dw && dw_f < 0.0, "drop-wave not refuted with a negative witness");
  const auto [dp, dp_f] = refuted_with_witness("dixon-price");
  c.expect(dp && dp_f < eval_at("dixon-price", {1, 1}), "dixon-price not refuted");

  std::set<std::string> listed;
  for (const Json& t : doc.at("tier3")) {
    c.expect(!t.at("reason").get<std::string>().empty(), "tier 3 entry without reason");
    listed.insert(t.at("function").get<std::string>());
  }
  for (const auto& e : catalog().entries()) {
    if (e.meta.tier == 3) c.expect(listed.count(e.meta.id.canonical_name) == 1, e.meta.id.canonical_name + " not listed");
  }
  c.detail << "drop-wave witness f=" << fmt(dw_f) << ", dixon-price witness f=" << fmt(dp_f) << ", "
           << listed.size() << " tier 3 entries with reasons";
}

void separability(Check& c) {
  for (const char* n : {"sphere", "sum-squares", "rastrigin", "powell-sum"}) {
    ProblemInstance p = make_problem(n, 4);
    const auto r = test_separability(p, 20, 1e-4, 1e-6, 1);
    c.expect(r.separable, std::string(n) + " declared non-separable");
  }
  for (const char* n : {"rosenbrock", "matyas", "mccormick"}) {
    ProblemInstance p = make_problem(n, 2);
    const auto r = test_separability(p, 20, 1e-4, 1e-6, 1);
    c.expect(!r.separable && r.max_mixed > 0.0 && !r.witness.empty(), std::string(n) + " declared separable");
    c.detail << n << " |fxy|=" << fmt(r.max_mixed) << " ";
  }
}

void modality(Check& c) {
  auto count = [&](const std::string& n, double lo, double hi, std::size_t res) {
    ProblemInstance p = make_problem(n, 2, std::nullopt, Bounds::uniform(lo, hi, 2));
    const std::size_t k = count_grid_minima_2d(p, res);
    c.detail << n << "=" << k << " ";
    return k;
  };
  c.expect(count("sphere", -100, 100, 201) == 1, "sphere");
  c.expect(count("himmelblau", -6, 6, 401) == 4, "himmelblau");
  c.expect(count("ripple-25", 0, 1, 501) >= 25, "ripple-25");
}

void convergence(Check& c) {
  OptimizerConfig de;
  de.kind = OptimizerKind::differential_evolution;
  de.budget = 10000;
  de.de.population = 50;
  de.de.F = 0.5;
  de.de.CR = 0.9;
  std::size_t pass = 0;
  double worst = 0.0;
  for (std::uint64_t s = 1; s <= 30; ++s) {
    de.seed = s;
    ProblemInstance p = make_problem("sphere", 10);
    const OptRunResult r = differential_evolution(p, de);
    pass += r.best_f <= 1e-6 && r.evals_used <= 10000;
    worst = std::max(worst, r.best_f);
  }
  c.expect(pass >= 29, "DE reached 1e-6 on " + std::to_string(pass) + "/30 seeds");

  OptimizerConfig nm;
  nm.kind = OptimizerKind::nelder_mead;
  nm.budget = 2000;
  ProblemInstance p = make_problem("rosenbrock", 2);
  const OptRunResult r = nelder_mead(p, Vec{-1.2, 1.0}, nm);
  c.expect(r.best_f <= 1e-8 && r.evals_used <= 2000, "nelder-mead best " + fmt(r.best_f));
  c.detail << "DE " << pass << "/30 at 1e-6 (worst " << fmt(worst) << "); NM " << fmt(r.best_f) << " in "
           << r.evals_used << " evals";
}

void dynamic_suite(Check& c) {
  Rng rng(2024);
  std::vector<Vec> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(sample_uniform(Bounds::uniform(-5, 5, 2), rng));

  DynamicSession a(DynamicKind::ddb, 2, 42), b(DynamicKind::ddb, 2, 42);
  bool same = true;
  for (const Vec& x : pts) same &= a.evaluate(x) == b.evaluate(x);
  c.expect(same, "(a) seed determinism");

  auto spread = [](double sigma) {
    DynamicSession s(DynamicKind::ddb, 2, 7, sigma);
    s.suppress_noise(true);
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < 100; ++i) {
      const double f = s.evaluate(Vec{0.5, 0.5});
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    return hi - lo;
  };
  c.expect(spread(0.05) > 0.0, "(b) no drift at sigma 0.05");
  c.expect(spread(0.0) == 0.0, "(b) drift at sigma 0");

  for (std::size_t n : {1u, 2u, 3u, 10u}) {
    DynamicSession s(DynamicKind::cddb, n, 1);
    s.suppress_noise(true);
    c.expect(s.evaluate(Vec(n, 0.0)) == 0.1 * double(n), "(c) cddb at origin, n=" + std::to_string(n));
  }

  for (DynamicKind k : {DynamicKind::ddb, DynamicKind::cddb}) {
    DynamicSession s(k, 3, 99);
    Rng r3(5);
    for (int i = 0; i < 50; ++i) s.evaluate(sample_uniform(Bounds::uniform(-5, 5, 3), r3));
    DynamicSession t = DynamicSession::restore(s.snapshot());
    bool bits = true;
    for (int i = 0; i < 50; ++i) {
      const Vec x = sample_uniform(Bounds::uniform(-5, 5, 3), r3);
      const double fs = s.evaluate(x), ft = t.evaluate(x);
      bits &= std::memcmp(&fs, &ft, sizeof fs) == 0;
    }
    c.expect(bits, "(d) snapshot round trip");
  }
  c.detail << "determinism, drift, cddb origin value, snapshot round trip";
}

void gradients(Check& c) {
  std::size_t checked = 0;
  double worst = 0.0;
  for (const std::string& n : Catalog::tier1_names()) {
    const FunctionMeta& m = lookup(n).meta;
    if (m.properties.stochastic || m.properties.differentiable != Label::yes) continue;
    const std::size_t d = m.dim_class.accepts(2) ? 2 : m.dim_class.n;
    ProblemInstance p = make_problem(n, d);
    const SmoothnessReport r = probe_smoothness(p, 20, derive_seed(1, n));
    c.expect(r.points == 20 && r.nonfinite == 0 && r.gradient_disagreements == 0, n);
    worst = std::max(worst, r.max_relative_disagreement);
    ++checked;
  }
  c.detail << checked << " smooth tier 1 entries, max relative disagreement " << fmt(worst);
}

void reproducibility(Check& c) {
  const std::string args = "suite --optimizer de --functions top25 --dims 2 --trials 3 --seeds 11,12,13";
  const fs::path a = g_tmp / "suite_a.json", b = g_tmp / "suite_b.json";
  const int ra = run_cli(args, a), rb = run_cli(args + " --jobs 2", b);
  c.expect(ra == 0 && rb == 0, "suite exit codes " + std::to_string(ra) + "/" + std::to_string(rb));
  if (ra != 0 || rb != 0) return;
  Json ja = read_json(a), jb = read_json(b);
  const std::size_t runs = ja.at("runs").size();
  strip_key(ja, "wall_time");
  strip_key(jb, "wall_time");
  const std::string sa = dump(ja), sb = dump(jb);
  c.expect(runs == 75, std::to_string(runs) + " runs");
  c.expect(sa == sb, "outputs differ");
  c.detail << runs << " runs, " << sa.size() << " bytes identical after removing wall_time";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <optbench-cli> [criterion...]\n");
    return 2;
  }
  g_cli = argv[1];
  g_tmp = fs::temp_directory_path() / ("optbench-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(g_tmp);

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"exact optima reproduce to 1e-9", exact_optima},
      {"rounded optima reproduce to 1e-3", rounded_optima},
      {"verify --all flags drop-wave, dixon-price and lists tier 3", discrepancy_ledger},
      {"separability suite", separability},
      {"grid minima counts", modality},
      {"DE 29/30 on 10-D sphere and Nelder-Mead on Rosenbrock", convergence},
      {"dynamic functions: determinism, drift, origin, snapshot", dynamic_suite},
      {"tier 1 gradient agreement", gradients},
      {"suite output reproducible", reproducibility},
  };
  std::set<int> only;
  for (int i = 2; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = int(k) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2fs): %s\n", c.ok ? "PASS" : "FAIL", id, criteria[k].first.c_str(), secs,
                (c.detail.str() + c.failures).c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  fs::remove_all(g_tmp);
  return failed == 0 ? 0 : 1;
}
