#ifndef CONDMODEL_ERROR_HPP
#define CONDMODEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace condmodel {

enum class ErrorCode {
  EmptySpace,
  NonpositiveWeight,
  SpaceMismatch,
  NotDisjoint,
  NotExhaustive,
  LengthMismatch,
  DivisionByZeroAtAtom,
  EmptyFiber,
  EmptyList,
  UnboundedFiber,
  SyntaxError,
  MixedCaseVariable,
  UnboundVariable,
  NotExistential,
  NotArithmetical,
  FreeSetVariableClash,
  EigenvariableViolation,
  UnknownRule,
  AxiomFailure,
  UnboundedOnHorizon,
  NoAdmissibleIndex,
  EvaluationError,
  MalformedScenario,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry a 1-based line/column position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, int line, int col)
      : Error(ErrorCode::SyntaxError, std::move(message)), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace condmodel

#endif
