#include "holweitz/errors.hpp"

namespace holweitz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::MixedRootSystems: return "MixedRootSystems";
    case ErrorCode::InternalNegativeMultiplicity: return "InternalNegativeMultiplicity";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::UnsupportedContext: return "UnsupportedContext";
    case ErrorCode::TrivialHolonomyRep: return "TrivialHolonomyRep";
    case ErrorCode::MultiplicityViolation: return "MultiplicityViolation";
    case ErrorCode::NotAFormComponent: return "NotAFormComponent";
    case ErrorCode::ContextNotSupported: return "ContextNotSupported";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::RegistryFormat: return "RegistryFormat";
  }
  return "Unknown";
}

}  // namespace holweitz
