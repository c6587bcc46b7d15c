#ifndef FUZZINT_ERROR_HPP
#define FUZZINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzint {

/// Every failure the library reports. Structural kinds mean "the input was
/// understood but violates an axiom"; the rest are usage or input errors.
enum class ErrorKind {
  // lattice-core
  EmptyCarrier,
  DuplicateElement,
  UnknownElement,
  NotAPartialOrder,
  MissingBound,
  TopEqualsBottom,
  DistributivityViolation,
  TooLarge,
  // monoid-structures
  IncompleteTable,
  NotIsotone,
  TopNotIdempotent,
  NotCommutative,
  NotAssociative,
  NotIntegral,
  NoZero,
  NotJoinDistributive,
  NotDivisible,
  NotResiduated,
  InvalidArgument,
  // fuzzy-powerset
  CarrierMismatch,
  JoinNotPreserved,
  TensorNotPreserved,
  TopNotPreserved,
  AdjointConditionFailed,
  // interior-core
  NotInterior,
  GroundMismatch,
  GroundTooLarge,
  EmptyFamily,
  TopMissingFromTopology,
  NotGLGround,
  // continuity-initial
  NotContinuous,
  PropertyPreconditionFailed,
  BoundsTooLarge,
  // examples-suite
  InvalidTopology,
  // model-search
  BoundsExceeded,
  UnknownProperty,
  MalformedBundle,
  // io / cli
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that describe an axiom failure of a well-formed input
/// (CLI exit code 1); false for input/usage errors (exit code 2).
bool is_structural(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Element/point names (or rendered fuzzy sets) exhibiting the failure.
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace fuzzint

#endif  // FUZZINT_ERROR_HPP
