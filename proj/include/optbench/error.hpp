#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace optbench {

enum class ErrorCode {
  UnknownFunction,
  DimensionMismatch,
  Tier3Unimplementable,
  MissingSeed,
  DomainError,
  NonFiniteInput,
  StochasticGradientUnsupported,
  StochasticUnverifiable,
  InvalidBounds,
  InvalidConfig,
  BadDimension,
  CorruptSnapshot,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace optbench
