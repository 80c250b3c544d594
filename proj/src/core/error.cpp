#include "optbench/error.hpp"

namespace optbench {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Tier3Unimplementable: return "Tier3Unimplementable";
    case ErrorCode::MissingSeed: return "MissingSeed";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::StochasticGradientUnsupported: return "StochasticGradientUnsupported";
    case ErrorCode::StochasticUnverifiable: return "StochasticUnverifiable";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::CorruptSnapshot: return "CorruptSnapshot";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace optbench
