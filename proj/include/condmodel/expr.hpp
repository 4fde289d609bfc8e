#ifndef CONDMODEL_EXPR_HPP
#define CONDMODEL_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "condmodel/error.hpp"
#include "condmodel/rational.hpp"

namespace condmodel {

// Exact rational expression trees used for integrands and sequence
// generators: +, -, *, /, min, max, abs, mod, rational constants, and
// variables (coordinates x1..xn, or a free index variable like k).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Const, Coord, Var, Add, Sub, Mul, Div, Min, Max, Abs, Mod, Neg };

  Kind kind;
  Rat value;          // Const
  std::size_t coord;  // Coord, 0-based
  std::string name;   // Var
  ExprPtr lhs, rhs;
};

// Grammar: usual precedence with unary minus; coordinates are x1, x2, ...;
// any other identifier is a free variable. Throws SyntaxError.
ExprPtr parse_expr(std::string_view text);

struct ExprEnv {
  std::span<const Rat> coords;       // values for x1..xn
  const Rat* var = nullptr;          // value of the single free variable, if any
  std::string var_name;
};

// Throws EvaluationError on division by zero or non-integer mod operands.
Rat eval_expr(const ExprPtr& e, const ExprEnv& env);

std::string format_expr(const ExprPtr& e);

}  // namespace condmodel

#endif
