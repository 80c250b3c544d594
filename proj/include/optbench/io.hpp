#pragma once

// JSON forms of the library types and the run-spec text format. Objects use
// sorted keys, so equal values always serialize to equal bytes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "optbench/catalog.hpp"
#include "optbench/optimize.hpp"
#include "optbench/verify.hpp"

namespace optbench {

using Json = nlohmann::json;

inline constexpr int kMetadataVersion = 1;
inline constexpr int kReportVersion = 1;
inline constexpr int kResultsVersion = 1;

Json to_json(const FunctionMeta& meta);
FunctionMeta meta_from_json(const Json& j);  // throws ParseError

// {"format", "version", "count", "functions": [...]}
Json metadata_document(const std::vector<FunctionMeta>& metas);
std::vector<FunctionMeta> read_metadata_document(const Json& doc);
Json catalog_metadata();

Json to_json(const OptimizerConfig& config);
Json to_json(const OptRunResult& result, bool with_history);
Json to_json(const ClaimStatus& status);
Json to_json(const VerificationReport& report);
Json to_json(const SuiteTable& table, bool with_history);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

// Declarative suite description in key = value lines under [section]
// headers; see docs/formats.md.
struct RunSpec {
  OptimizerConfig config;
  std::vector<std::string> functions;
  std::vector<std::size_t> dims;
  std::size_t trials = 0;
  std::vector<std::uint64_t> seeds;
  std::string output;  // empty: standard output
  bool history = false;
};

RunSpec parse_run_spec(const std::string& text);  // throws ParseError

// "top25", "tier1", "all" (every tier 1/2 entry) or a comma-separated list.
std::vector<std::string> resolve_function_set(const std::string& text);

std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace optbench
