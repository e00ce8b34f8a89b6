#pragma once

#include <stdexcept>
#include <string>

namespace isored {

// Values are mirrored by isored_status in the C API; keep them in sync.
enum class ErrorCode : int {
  InvalidArgument = 1,
  ParseError,
  DuplicateEdge,
  BadVertexIndex,
  EmptySet,
  CycleInComplement,
  LoopWeightIsLambda,
  NotLambda0Structural,
  LoopWeightEqualsLambda0,
  SingularComplement,
  SingularComplementAtLambda0,
  SingularBasis,
  DivisionByZeroFunction,
  PoleError,
  NearPoleError,
  NotAnEigenvalue,
  ChainTerminated,
  ZeroVectorInput,
  ComplementNotSingleton,
  ComplementNotDisconnected,
  HypothesisViolated,
  RuleInapplicable,
  CrossValidationFailed,
  NumericFailure,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isored
