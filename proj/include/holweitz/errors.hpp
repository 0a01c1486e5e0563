#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holweitz {

enum class ErrorCode {
  UnsupportedType,
  DimensionMismatch,
  NotDominant,
  MixedRootSystems,
  InternalNegativeMultiplicity,
  DegreeOutOfRange,
  NotACharacter,
  UnsupportedContext,
  TrivialHolonomyRep,
  MultiplicityViolation,
  NotAFormComponent,
  ContextNotSupported,
  InvalidWeight,
  RegistryFormat,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation. The code names the
/// failure kind; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holweitz
