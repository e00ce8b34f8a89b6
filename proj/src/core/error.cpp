#include "isored/error.hpp"

namespace isored {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadVertexIndex: return "BadVertexIndex";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CycleInComplement: return "CycleInComplement";
    case ErrorCode::LoopWeightIsLambda: return "LoopWeightIsLambda";
    case ErrorCode::NotLambda0Structural: return "NotLambda0Structural";
    case ErrorCode::LoopWeightEqualsLambda0: return "LoopWeightEqualsLambda0";
    case ErrorCode::SingularComplement: return "SingularComplement";
    case ErrorCode::SingularComplementAtLambda0: return "SingularComplementAtLambda0";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::NearPoleError: return "NearPoleError";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::ChainTerminated: return "ChainTerminated";
    case ErrorCode::ZeroVectorInput: return "ZeroVectorInput";
    case ErrorCode::ComplementNotSingleton: return "ComplementNotSingleton";
    case ErrorCode::ComplementNotDisconnected: return "ComplementNotDisconnected";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::RuleInapplicable: return "RuleInapplicable";
    case ErrorCode::CrossValidationFailed: return "CrossValidationFailed";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace isored
