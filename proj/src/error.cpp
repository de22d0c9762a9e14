#include "majcl/error.hpp"

#include <cstdlib>
#include <string>

#include "majcl/limits.hpp"

namespace majcl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConflictingEdge: return "ConflictingEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooFewCandidates: return "TooFewCandidates";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::SamePair: return "SamePair";
    case ErrorKind::OutOfUnitInterval: return "OutOfUnitInterval";
    case ErrorKind::WeightsDoNotSumToOne: return "WeightsDoNotSumToOne";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooManyCandidates: return "TooManyCandidates";
    case ErrorKind::MalformedProgram: return "MalformedProgram";
    case ErrorKind::BalancedFamily: return "BalancedFamily";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotPseudoBalanced: return "NotPseudoBalanced";
    case ErrorKind::BalancedTriangleMissing: return "BalancedTriangleMissing";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::ScopeTooLarge: return "ScopeTooLarge";
    case ErrorKind::CyclicNeedsOddN: return "CyclicNeedsOddN";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

Limits limits_from_env() {
  Limits limits;
  if (const char* cap = std::getenv("MF_ORBIT_CAP")) {
    try {
      const int value = std::stoi(cap);
      if (value >= 3) limits.orbit_cap = value;
    } catch (const std::exception&) {
      // unparsable override: keep the default
    }
  }
  return limits;
}

}  // namespace majcl
