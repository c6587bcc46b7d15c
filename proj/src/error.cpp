#include "fuzzint/error.hpp"

namespace fuzzint {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::TopEqualsBottom: return "TopEqualsBottom";
    case ErrorKind::DistributivityViolation: return "DistributivityViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::NotIsotone: return "NotIsotone";
    case ErrorKind::TopNotIdempotent: return "TopNotIdempotent";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::JoinNotPreserved: return "JoinNotPreserved";
    case ErrorKind::TensorNotPreserved: return "TensorNotPreserved";
    case ErrorKind::TopNotPreserved: return "TopNotPreserved";
    case ErrorKind::AdjointConditionFailed: return "AdjointConditionFailed";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::TopMissingFromTopology: return "TopMissingFromTopology";
    case ErrorKind::NotGLGround: return "NotGLGround";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::PropertyPreconditionFailed: return "PropertyPreconditionFailed";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::MalformedBundle: return "MalformedBundle";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_structural(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPartialOrder:
    case ErrorKind::MissingBound:
    case ErrorKind::TopEqualsBottom:
    case ErrorKind::DistributivityViolation:
    case ErrorKind::NotIsotone:
    case ErrorKind::TopNotIdempotent:
    case ErrorKind::NotCommutative:
    case ErrorKind::NotAssociative:
    case ErrorKind::NotIntegral:
    case ErrorKind::NoZero:
    case ErrorKind::NotJoinDistributive:
    case ErrorKind::NotDivisible:
    case ErrorKind::NotResiduated:
    case ErrorKind::JoinNotPreserved:
    case ErrorKind::TensorNotPreserved:
    case ErrorKind::TopNotPreserved:
    case ErrorKind::AdjointConditionFailed:
    case ErrorKind::NotInterior:
    case ErrorKind::TopMissingFromTopology:
    case ErrorKind::NotContinuous:
    case ErrorKind::PropertyPreconditionFailed:
    case ErrorKind::InvalidTopology:
      return true;
    default:
      return false;
  }
}

}  // namespace fuzzint
