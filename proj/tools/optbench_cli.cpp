// optbench command line: list, info, eval, grid, verify, run, suite and
// export-metadata. Exit codes: 0 ok, 1 internal error, 2 usage or parse
// error, 3 domain error, 4 unwritable output, 5 unimplementable function.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "optbench/catalog.hpp"
#include "optbench/io.hpp"
#include "optbench/optimize.hpp"
#include "optbench/verify.hpp"

using namespace optbench;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitOutput = 4;
constexpr int kExitTier3 = 5;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Empty path: $OPTBENCH_DATA_DIR/<fallback> when the variable is set,
// otherwise standard output. "-" is always standard output.
void write_output(const std::string& path, const std::string& fallback, const std::string& text) {
  std::string target = path;
  if (target.empty()) {
    if (const char* dir = std::getenv("OPTBENCH_DATA_DIR"); dir && *dir) {
      target = (std::filesystem::path(dir) / fallback).string();
    }
  }
  if (target.empty() || target == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw OutputError("cannot open output file: " + target);
  out << text;
  out.close();
  if (!out) throw OutputError("cannot write output file: " + target);
}

Vec parse_point(const std::string& text) {
  Vec x;
  for (const std::string& s : split_list(text)) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) raise(ErrorCode::ParseError, "not a number: " + s);
    x.push_back(v);
  }
  if (x.empty()) raise(ErrorCode::ParseError, "empty point");
  return x;
}

void tri_flag(CLI::App* app, const std::string& names, std::optional<bool>& target,
              const std::string& help) {
  app->add_flag_function(names, [&target](std::int64_t c) { target = c > 0; }, help);
}

// Work items run on `jobs` threads; results land at their own index.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) return worker();
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::string dim_text(const DimClass& d) {
  if (d.kind == DimClass::Kind::fixed) return "d=" + std::to_string(d.n);
  return "d>=" + std::to_string(d.n) + (d.step > 1 ? " step " + std::to_string(d.step) : "");
}

std::string props_text(const PropertySet& p) {
  auto lab = [](Label l, const char* yes, const char* no) {
    return l == Label::yes ? yes : l == Label::no ? no : "?";
  };
  std::string s = std::string(lab(p.continuous, "C", "NC")) + " " + lab(p.differentiable, "D", "ND") + " " +
                  lab(p.separable, "S", "NS") + " " + lab(p.scalable, "Sc", "NSc") + " " +
                  (p.modality == Modality::unimodal     ? "U"
                   : p.modality == Modality::multimodal ? "M"
                                                        : "?");
  if (p.dynamic) s += " dyn";
  else if (p.stochastic) s += " stoch";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark function catalog, verification and baseline optimizers"};
  app.require_subcommand(1);
  std::function<int()> action;

  // list
  ListFilter filter;
  std::optional<int> tier;
  std::string modality, format = "text";
  std::optional<std::size_t> list_dim;
  auto* list = app.add_subcommand("list", "List catalog entries matching the filters");
  list->add_option("--tier", tier, "Tier 1, 2 or 3")->check(CLI::Range(1, 3));
  list->add_option("--modality", modality)->check(CLI::IsMember({"unimodal", "multimodal", "unknown"}));
  tri_flag(list, "--continuous,!--non-continuous", filter.continuous, "Continuity label");
  tri_flag(list, "--differentiable,!--non-differentiable", filter.differentiable, "Differentiability label");
  tri_flag(list, "--separable,!--non-separable", filter.separable, "Separability label");
  tri_flag(list, "--scalable,!--non-scalable", filter.scalable, "Scalability label");
  tri_flag(list, "--stochastic,!--deterministic", filter.stochastic, "Stochastic entries");
  tri_flag(list, "--dynamic,!--static", filter.dynamic, "Drifting entries");
  list->add_option("--dim", list_dim, "Usable at this dimension");
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  list->callback([&] {
    action = [&] {
      filter.tier = tier;
      filter.dimension = list_dim;
      if (modality == "unimodal") filter.modality = Modality::unimodal;
      if (modality == "multimodal") filter.modality = Modality::multimodal;
      if (modality == "unknown") filter.modality = Modality::unknown;
      const auto ids = catalog().list(filter);
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& id : ids) arr.push_back(to_json(lookup(id.canonical_name).meta));
        std::cout << dump(arr);
        return 0;
      }
      for (const auto& id : ids) {
        const FunctionMeta& m = lookup(id.canonical_name).meta;
        std::cout << m.id.canonical_name << "\ttier " << m.tier << "\t" << dim_text(m.dim_class) << "\t"
                  << props_text(m.properties);
        if (m.tier == 3) std::cout << "\t" << m.tier_reason;
        std::cout << "\n";
      }
      return 0;
    };
  });

  // info
  std::string info_name;
  auto* info = app.add_subcommand("info", "Print one entry's metadata as JSON");
  info->add_option("function", info_name)->required();
  info->callback([&] {
    action = [&] {
      std::cout << dump(to_json(lookup(info_name).meta));
      return 0;
    };
  });

  // eval
  std::string eval_name, eval_x;
  std::optional<std::uint64_t> eval_seed;
  auto* ev = app.add_subcommand("eval", "Evaluate a function at one point");
  ev->add_option("function", eval_name)->required();
  ev->add_option("--x", eval_x, "Comma-separated coordinates")->required();
  ev->add_option("--seed", eval_seed, "Seed for stochastic entries");
  ev->callback([&] {
    action = [&] {
      const Vec x = parse_point(eval_x);
      ProblemInstance p = make_problem(eval_name, x.size(), eval_seed);
      std::cout << fmt17(p.evaluate(x)) << "\n";
      return 0;
    };
  });

  // grid
  std::string grid_name, grid_out;
  std::size_t resolution = 0;
  std::optional<std::uint64_t> grid_seed;
  auto* grid = app.add_subcommand("grid", "Write f over a 2-D grid on the default bounds as CSV");
  grid->add_option("function", grid_name)->required();
  grid->add_option("--resolution", resolution, "Points per axis")->required()->check(CLI::Range(2, 100000));
  grid->add_option("--out", grid_out, "Output file, - for standard output");
  grid->add_option("--seed", grid_seed, "Seed for stochastic entries");
  grid->callback([&] {
    action = [&] {
      ProblemInstance p = make_problem(grid_name, 2, grid_seed);
      const Bounds& b = p.bounds();
      auto coord = [&](std::size_t axis, std::size_t k) {
        return k + 1 == resolution ? b.upper()[axis]
                                   : b.lower()[axis] + b.width(axis) * double(k) / double(resolution - 1);
      };
      std::string csv = "x0,x1,f\n";
      Vec x(2);
      for (std::size_t r = 0; r < resolution; ++r) {
        x[1] = coord(1, r);
        for (std::size_t c = 0; c < resolution; ++c) {
          x[0] = coord(0, c);
          double f;
          try {
            f = p.evaluate(x);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::DomainError) throw;
            f = std::nan("");
          }
          csv += fmt17(x[0]) + "," + fmt17(x[1]) + "," + fmt17(f) + "\n";
        }
      }
      write_output(grid_out, "grid-" + p.meta().id.canonical_name + ".csv", csv);
      return 0;
    };
  });

  // verify
  std::string verify_name, verify_out;
  bool verify_all = false;
  std::size_t verify_dim = 2, jobs = 1;
  std::uint64_t verify_budget = 10000, verify_seed = 1;
  auto* ver = app.add_subcommand("verify", "Audit optimum claims and property labels");
  ver->add_option("function", verify_name);
  ver->add_flag("--all", verify_all, "Every tier 1 and 2 entry; tier 3 entries are listed with reasons");
  ver->add_option("--dim", verify_dim)->check(CLI::PositiveNumber);
  ver->add_option("--budget", verify_budget, "Evaluations per claim")->check(CLI::PositiveNumber);
  ver->add_option("--seed", verify_seed);
  ver->add_option("--out", verify_out, "Output file, - for standard output");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->callback([&] {
    action = [&] {
      if (verify_all == !verify_name.empty()) {
        raise(ErrorCode::InvalidConfig, "give either a function or --all");
      }
      if (!verify_all) {
        const VerificationReport rep = full_report(verify_name, verify_dim, verify_seed, verify_budget);
        write_output(verify_out, "verify-" + rep.function + ".json", dump(to_json(rep)));
        return 0;
      }
      const auto& entries = catalog().entries();
      std::vector<std::optional<VerificationReport>> reports(entries.size());
      std::vector<std::string> errors(entries.size());
      parallel_for(entries.size(), jobs, [&](std::size_t i) {
        if (!entries[i].evaluable()) return;
        try {
          reports[i] = full_report(entries[i].meta.id.canonical_name, verify_dim, verify_seed, verify_budget);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });
      Json reps = Json::array(), tier3 = Json::array(), errs = Json::array(), refuted = Json::array();
      std::size_t counts[3] = {0, 0, 0};
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const FunctionMeta& m = entries[i].meta;
        if (!entries[i].evaluable()) {
          tier3.push_back({{"function", m.id.canonical_name}, {"reason", m.tier_reason}});
          continue;
        }
        if (!reports[i]) {
          errs.push_back({{"function", m.id.canonical_name}, {"error", errors[i]}});
          continue;
        }
        for (const ClaimStatus& c : reports[i]->claims) {
          ++counts[int(c.verdict)];
          if (c.verdict == Verdict::refuted) {
            Json j = to_json(c);
            j["function"] = m.id.canonical_name;
            refuted.push_back(j);
          }
        }
        reps.push_back(to_json(*reports[i]));
      }
      const Json doc = {{"format", "optbench-verification-ledger"},
                        {"version", kReportVersion},
                        {"dim", verify_dim},
                        {"seed", verify_seed},
                        {"budget", verify_budget},
                        {"summary",
                         {{"confirmed", counts[0]},
                          {"refuted", counts[1]},
                          {"inconclusive", counts[2]},
                          {"functions", reps.size()},
                          {"tier3", tier3.size()},
                          {"errors", errs.size()}}},
                        {"refuted", refuted},
                        {"tier3", tier3},
                        {"errors", errs},
                        {"reports", reps}};
      write_output(verify_out, "verify-all.json", dump(doc));
      std::cerr << "claims: " << counts[0] << " confirmed, " << counts[1] << " refuted, " << counts[2]
                << " inconclusive; " << tier3.size() << " tier 3 entries listed\n";
      return 0;
    };
  });

  // run and suite share the optimizer options
  OptimizerConfig cfg;
  std::string run_opt = "de", run_name, run_out;
  std::size_t run_dim = 2;
  std::optional<std::uint64_t> run_seed, run_budget;
  std::string x0_text;
  bool history = false;
  auto add_opt_flags = [&](CLI::App* c) {
    c->add_option("--budget", run_budget, "Evaluation budget (default 1000)")->check(CLI::PositiveNumber);
    c->add_option("--pop", cfg.de.population, "DE population");
    c->add_option("--F", cfg.de.F, "DE differential weight");
    c->add_option("--CR", cfg.de.CR, "DE crossover rate");
    c->add_flag("--synchronous", cfg.de.synchronous, "DE generational replacement");
    c->add_flag("--history", history, "Include the best-so-far trace");
  };
  auto* run = app.add_subcommand("run", "One optimizer run");
  run->add_option("optimizer", run_opt, "de, nm or rs")->required();
  run->add_option("function", run_name)->required();
  run->add_option("--dim", run_dim)->check(CLI::PositiveNumber);
  run->add_option("--seed", run_seed)->required();
  run->add_option("--x0", x0_text, "Nelder-Mead start point (default: uniform draw)");
  run->add_option("--out", run_out, "Output file, - for standard output");
  add_opt_flags(run);
  run->callback([&] {
    action = [&] {
      cfg.kind = parse_optimizer(run_opt);
      cfg.budget = run_budget.value_or(OptimizerConfig{}.budget);
      cfg.seed = *run_seed;
      const std::string name = lookup(run_name).meta.id.canonical_name;
      ProblemInstance p = make_problem(name, run_dim, derive_seed(*run_seed, name));
      OptRunResult r;
      if (cfg.kind == OptimizerKind::nelder_mead && !x0_text.empty()) {
        r = nelder_mead(p, parse_point(x0_text), cfg);
      } else {
        r = run_optimizer(p, cfg);
      }
      Json j = to_json(r, history);
      j.update({{"format", "optbench-run"},
                {"version", kResultsVersion},
                {"function", name},
                {"dim", run_dim},
                {"optimizer", to_json(cfg)}});
      write_output(run_out, "run-" + name + ".json", dump(j));
      return 0;
    };
  });

  std::string spec_path, suite_functions, suite_dims, suite_seeds, suite_out;
  std::optional<std::size_t> suite_trials;
  auto* suite = app.add_subcommand("suite", "Optimizer runs over functions x dims x trials");
  suite->add_option("--spec", spec_path, "Run spec file")->check(CLI::ExistingFile);
  suite->add_option("--optimizer", run_opt, "de, nm or rs");
  suite->add_option("--functions", suite_functions, "top25, tier1, all or a comma-separated list");
  suite->add_option("--dims", suite_dims, "Comma-separated dimensions");
  suite->add_option("--trials", suite_trials);
  suite->add_option("--seeds", suite_seeds, "Comma-separated seeds, one per trial");
  suite->add_option("--out", suite_out, "Output file, - for standard output");
  suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_opt_flags(suite);
  suite->callback([&] {
    action = [&] {
      RunSpec spec;
      if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        std::stringstream ss;
        ss << in.rdbuf();
        spec = parse_run_spec(ss.str());
      } else {
        std::ostringstream text;
        text << "[suite]\noptimizer = " << run_opt << "\n";
        text << "budget = " << run_budget.value_or(OptimizerConfig{}.budget) << "\n";
        if (!suite_functions.empty()) text << "functions = " << suite_functions << "\n";
        if (!suite_dims.empty()) text << "dims = " << suite_dims << "\n";
        if (!suite_seeds.empty()) text << "seeds = " << suite_seeds << "\n";
        if (suite_trials) text << "trials = " << *suite_trials << "\n";
        text << "history = " << (history ? "true" : "false") << "\n";
        text << "[de]\npopulation = " << cfg.de.population << "\nF = " << fmt17(cfg.de.F)
             << "\nCR = " << fmt17(cfg.de.CR) << "\nsynchronous = " << (cfg.de.synchronous ? "true" : "false")
             << "\n";
        spec = parse_run_spec(text.str());
      }
      const SuiteTable table = run_suite(spec.config, spec.functions, spec.dims, spec.trials, spec.seeds, jobs);
      Json j = to_json(table, spec.history);
      j.update({{"format", "optbench-results"},
                {"version", kResultsVersion},
                {"optimizer", to_json(spec.config)},
                {"functions", spec.functions},
                {"dims", spec.dims},
                {"trials", spec.trials},
                {"seeds", std::vector<std::uint64_t>(spec.seeds.begin(), spec.seeds.begin() + spec.trials)}});
      write_output(suite_out.empty() ? spec.output : suite_out, "suite.json", dump(j));
      return 0;
    };
  });

  // export-metadata
  std::string meta_out, meta_from;
  auto* exp = app.add_subcommand("export-metadata", "Dump the metadata of every entry as JSON");
  exp->add_option("--out", meta_out, "Output file, - for standard output");
  exp->add_option("--from", meta_from, "Re-export a previously exported file")->check(CLI::ExistingFile);
  exp->callback([&] {
    action = [&] {
      Json doc;
      if (meta_from.empty()) {
        doc = catalog_metadata();
      } else {
        std::ifstream in(meta_from);
        Json loaded;
        try {
          loaded = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          raise(ErrorCode::ParseError, std::string("cannot parse ") + meta_from + ": " + e.what());
        }
        doc = metadata_document(read_metadata_document(loaded));
      }
      write_output(meta_out, "metadata.json", dump(doc));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::DomainError: return kExitDomain;
      case ErrorCode::Tier3Unimplementable: return kExitTier3;
      default: return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
