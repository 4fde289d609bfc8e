#include "condmodel/error.hpp"

namespace condmodel {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotExhaustive: return "NotExhaustive";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DivisionByZeroAtAtom: return "DivisionByZeroAtAtom";
    case ErrorCode::EmptyFiber: return "EmptyFiber";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::UnboundedFiber: return "UnboundedFiber";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MixedCaseVariable: return "MixedCaseVariable";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NotExistential: return "NotExistential";
    case ErrorCode::NotArithmetical: return "NotArithmetical";
    case ErrorCode::FreeSetVariableClash: return "FreeSetVariableClash";
    case ErrorCode::EigenvariableViolation: return "EigenvariableViolation";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
    case ErrorCode::UnboundedOnHorizon: return "UnboundedOnHorizon";
    case ErrorCode::NoAdmissibleIndex: return "NoAdmissibleIndex";
    case ErrorCode::EvaluationError: return "EvaluationError";
    case ErrorCode::MalformedScenario: return "MalformedScenario";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace condmodel
