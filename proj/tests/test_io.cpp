#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "optbench/io.hpp"

using namespace optbench;

namespace {

ErrorCode spec_code(const std::string& text, std::string* msg = nullptr) {
  try {
    parse_run_spec(text);
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.code();
  }
  ADD_FAILURE() << "spec accepted:\n" << text;
  return ErrorCode::InvalidConfig;
}

const char* kSpec = R"(# baseline
[suite]
optimizer = de
budget = 2000
functions = sphere, rastrigin
dims = 2,5
seeds = 1, 2, 3
history = true

[de]
population = 20   ; small
F = 0.7
CR = 0.5
)";

}  // namespace

TEST(Metadata, RoundTripIsByteIdentical) {
  const Json doc = catalog_metadata();
  const std::string text = dump(doc);
  const auto metas = read_metadata_document(Json::parse(text));
  EXPECT_EQ(metas.size(), doc.at("count").get<std::size_t>());
  EXPECT_EQ(dump(metadata_document(metas)), text);
}

TEST(Metadata, DocumentShape) {
  const Json doc = catalog_metadata();
  EXPECT_EQ(doc.at("format"), "optbench-metadata");
  EXPECT_EQ(doc.at("version"), kMetadataVersion);
  EXPECT_GE(doc.at("count").get<std::size_t>(), 300u);
  const Json& f = doc.at("functions").at(0);
  for (const char* k : {"name", "aliases", "properties", "default_bounds", "dim_class", "optima", "tier"}) {
    EXPECT_TRUE(f.contains(k)) << k;
  }
}

TEST(Metadata, RejectsDamagedDocuments) {
  Json doc = catalog_metadata();
  doc["count"] = 1;
  EXPECT_THROW(read_metadata_document(doc), Error);
  Json bad = catalog_metadata();
  bad["functions"][0].erase("optima");
  EXPECT_THROW(read_metadata_document(bad), Error);
  bad = catalog_metadata();
  bad["functions"][0]["properties"]["modality"] = "bimodal";
  EXPECT_THROW(read_metadata_document(bad), Error);
  bad = catalog_metadata();
  bad["format"] = "something-else";
  EXPECT_THROW(read_metadata_document(bad), Error);
}

TEST(Json, NonFiniteBecomesNull) {
  OptRunResult r;
  r.best_f = std::numeric_limits<double>::infinity();
  r.best_x = {std::nan("")};
  const Json j = to_json(r, false);
  EXPECT_TRUE(j.at("best_f").is_null());
  EXPECT_TRUE(j.at("best_x").at(0).is_null());
  EXPECT_FALSE(j.contains("history"));
}

TEST(Json, DoublesRoundTrip) {
  OptRunResult r;
  r.best_f = 0.1 + 0.2;
  r.best_x = {1.0 / 3.0, -2.5e-300};
  const Json back = Json::parse(dump(to_json(r, true)));
  EXPECT_EQ(back.at("best_f").get<double>(), r.best_f);
  EXPECT_EQ(back.at("best_x").at(0).get<double>(), r.best_x[0]);
  EXPECT_EQ(back.at("best_x").at(1).get<double>(), r.best_x[1]);
}

TEST(Json, DumpSortsKeysAndEndsWithNewline) {
  const std::string s = dump(Json{{"b", 1}, {"a", 2}});
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
  EXPECT_EQ(s.back(), '\n');
}

TEST(Json, ReportShape) {
  const Json j = to_json(full_report("himmelblau", 2, 1, 2000));
  EXPECT_EQ(j.at("format"), "optbench-verification");
  EXPECT_EQ(j.at("grid_minima").at("minima"), 4);
  EXPECT_FALSE(j.at("claims").empty());
  EXPECT_TRUE(j.at("claims").at(0).contains("verdict"));
}

TEST(RunSpec, Parses) {
  const RunSpec s = parse_run_spec(kSpec);
  EXPECT_EQ(s.config.kind, OptimizerKind::differential_evolution);
  EXPECT_EQ(s.config.budget, 2000u);
  EXPECT_EQ(s.functions, (std::vector<std::string>{"sphere", "rastrigin"}));
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{2, 5}));
  EXPECT_EQ(s.trials, 3u);
  EXPECT_EQ(s.seeds.size(), 3u);
  EXPECT_TRUE(s.history);
  EXPECT_EQ(s.config.de.population, 20u);
  EXPECT_EQ(s.config.de.F, 0.7);
  EXPECT_EQ(s.config.de.CR, 0.5);
}

TEST(RunSpec, FunctionSetsResolve) {
  EXPECT_EQ(resolve_function_set("top25").size(), 25u);
  EXPECT_EQ(resolve_function_set("tier1").size(), 27u);
  EXPECT_GT(resolve_function_set("all").size(), 200u);
  EXPECT_EQ(resolve_function_set("de-jong, banana"), (std::vector<std::string>{"sphere", "rosenbrock"}));
  EXPECT_THROW(resolve_function_set("sphere, nope"), Error);
}

TEST(RunSpec, Errors) {
  const std::string base = "[suite]\noptimizer = rs\nbudget = 10\nfunctions = sphere\ndims = 2\n";
  std::string msg;
  EXPECT_EQ(spec_code(base, &msg), ErrorCode::ParseError);
  EXPECT_NE(msg.find("seeds"), std::string::npos);
  EXPECT_EQ(spec_code(base + "seeds = 1\ncolour = red\n", &msg), ErrorCode::ParseError);
  EXPECT_NE(msg.find("line 7"), std::string::npos);
  EXPECT_EQ(spec_code(base + "seeds = 1\nbudget = 20\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code(base + "seeds = 1\n[pso]\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code("budget = 10\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code(base + "seeds = 1\ntrials = 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code(base + "seeds = x\n"), ErrorCode::ParseError);
  const std::string de = "[suite]\noptimizer = de\nbudget = 10\nfunctions = sphere\ndims = 2\nseeds = 1\n";
  EXPECT_EQ(spec_code(de + "[de]\npopulation = 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code(base + "seeds = 1\n[de]\nF = nan\n"), ErrorCode::ParseError);
  EXPECT_EQ(spec_code("[suite]\noptimizer = pso\nbudget = 10\nfunctions = sphere\ndims = 2\nseeds = 1\n"),
            ErrorCode::ParseError);
}

TEST(RunSpec, SuiteJsonShape) {
  const RunSpec s = parse_run_spec(kSpec);
  const SuiteTable t = run_suite(s.config, s.functions, s.dims, s.trials, s.seeds);
  const Json j = to_json(t, s.history);
  ASSERT_EQ(j.at("runs").size(), 12u);
  EXPECT_TRUE(j.at("runs").at(0).contains("history"));
  EXPECT_EQ(j.at("summaries").size(), 4u);
}
