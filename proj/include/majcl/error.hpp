#pragma once

#include <stdexcept>
#include <string>

namespace majcl {

enum class ErrorKind {
  ConflictingEdge,
  IndexOutOfRange,
  TooFewCandidates,
  InvalidPermutation,
  OrbitTooLarge,
  NotFull,
  SamePair,
  OutOfUnitInterval,
  WeightsDoNotSumToOne,
  InvalidProfile,
  DimensionMismatch,
  TooManyCandidates,
  MalformedProgram,
  BalancedFamily,
  NotRealizable,
  NotBalanced,
  NotPseudoBalanced,
  BalancedTriangleMissing,
  RepeatedVertex,
  TooShort,
  ScopeTooLarge,
  CyclicNeedsOddN,
  ParseError,
  InternalCheckFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace majcl
