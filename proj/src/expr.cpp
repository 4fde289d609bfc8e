#include "condmodel/expr.hpp"

#include <cctype>
#include <utility>

namespace condmodel {

namespace {

ExprPtr make(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (eat('+')) {
        e = make(Expr::Kind::Add, e, product());
      } else if (eat('-')) {
        e = make(Expr::Kind::Sub, e, product());
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    ExprPtr e = unary();
    for (;;) {
      if (eat('*')) {
        e = make(Expr::Kind::Mul, e, unary());
      } else if (eat('/')) {
        e = make(Expr::Kind::Div, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (eat('-')) return make(Expr::Kind::Neg, unary());
    return atom();
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    auto e = make(Expr::Kind::Const);
    try {
      const_cast<Expr*>(e.get())->value =
          parse_rational(std::string(text_.substr(start, pos_ - start)));
    } catch (const Error&) {
      pos_ = start;
      fail("malformed number");
    }
    return e;
  }

  ExprPtr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));

    if (name == "min" || name == "max" || name == "abs" || name == "mod") {
      if (!eat('(')) fail("expected '(' after " + name);
      ExprPtr a = sum();
      if (name == "abs") {
        if (!eat(')')) fail("expected ')'");
        return make(Expr::Kind::Abs, std::move(a));
      }
      if (!eat(',')) fail("expected ','");
      ExprPtr b = sum();
      if (!eat(')')) fail("expected ')'");
      Expr::Kind kind = name == "min"   ? Expr::Kind::Min
                        : name == "max" ? Expr::Kind::Max
                                        : Expr::Kind::Mod;
      return make(kind, std::move(a), std::move(b));
    }

    // coordinates are x1, x2, ... (1-based in the surface syntax)
    if (name.size() >= 2 && name[0] == 'x') {
      bool all_digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        all_digits = all_digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (all_digits && name[1] != '0') {
        auto e = make(Expr::Kind::Coord);
        const_cast<Expr*>(e.get())->coord = std::stoull(name.substr(1)) - 1;
        return e;
      }
    }

    auto e = make(Expr::Kind::Var);
    const_cast<Expr*>(e.get())->name = std::move(name);
    return e;
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

Rat eval_expr(const ExprPtr& e, const ExprEnv& env) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return e->value;
    case Expr::Kind::Coord:
      if (e->coord >= env.coords.size())
        throw Error(ErrorCode::EvaluationError,
                    "coordinate x" + std::to_string(e->coord + 1) + " out of range");
      return env.coords[e->coord];
    case Expr::Kind::Var:
      if (!env.var || (!env.var_name.empty() && env.var_name != e->name))
        throw Error(ErrorCode::UnboundVariable, "unbound variable: " + e->name);
      return *env.var;
    case Expr::Kind::Add:
      return eval_expr(e->lhs, env) + eval_expr(e->rhs, env);
    case Expr::Kind::Sub:
      return eval_expr(e->lhs, env) - eval_expr(e->rhs, env);
    case Expr::Kind::Mul:
      return eval_expr(e->lhs, env) * eval_expr(e->rhs, env);
    case Expr::Kind::Div: {
      Rat d = eval_expr(e->rhs, env);
      if (d == 0) throw Error(ErrorCode::EvaluationError, "division by zero");
      return eval_expr(e->lhs, env) / d;
    }
    case Expr::Kind::Min: {
      Rat a = eval_expr(e->lhs, env), b = eval_expr(e->rhs, env);
      return a < b ? a : b;
    }
    case Expr::Kind::Max: {
      Rat a = eval_expr(e->lhs, env), b = eval_expr(e->rhs, env);
      return a < b ? b : a;
    }
    case Expr::Kind::Abs: {
      Rat a = eval_expr(e->lhs, env);
      return a < 0 ? Rat(-a) : a;
    }
    case Expr::Kind::Mod: {
      Rat a = eval_expr(e->lhs, env), b = eval_expr(e->rhs, env);
      if (a.get_den() != 1 || b.get_den() != 1)
        throw Error(ErrorCode::EvaluationError, "mod needs integer operands");
      if (b == 0) throw Error(ErrorCode::EvaluationError, "mod by zero");
      Int r;
      mpz_mod(r.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
      return Rat(r);
    }
    case Expr::Kind::Neg:
      return -eval_expr(e->lhs, env);
  }
  throw Error(ErrorCode::EvaluationError, "bad expression node");
}

namespace {

int expr_prec(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

void format_rec(const ExprPtr& e, std::string& out) {
  auto wrap = [&](const ExprPtr& child, int min_prec) {
    if (expr_prec(child) < min_prec) {
      out += '(';
      format_rec(child, out);
      out += ')';
    } else {
      format_rec(child, out);
    }
  };
  switch (e->kind) {
    case Expr::Kind::Const: out += rational_to_string(e->value); return;
    case Expr::Kind::Coord: out += "x" + std::to_string(e->coord + 1); return;
    case Expr::Kind::Var: out += e->name; return;
    case Expr::Kind::Add:
      wrap(e->lhs, 1); out += " + "; wrap(e->rhs, 2); return;
    case Expr::Kind::Sub:
      wrap(e->lhs, 1); out += " - "; wrap(e->rhs, 2); return;
    case Expr::Kind::Mul:
      wrap(e->lhs, 2); out += " * "; wrap(e->rhs, 3); return;
    case Expr::Kind::Div:
      wrap(e->lhs, 2); out += " / "; wrap(e->rhs, 3); return;
    case Expr::Kind::Neg:
      out += '-'; wrap(e->lhs, 3); return;
    case Expr::Kind::Min:
    case Expr::Kind::Max:
    case Expr::Kind::Mod:
      out += e->kind == Expr::Kind::Min ? "min(" : e->kind == Expr::Kind::Max ? "max(" : "mod(";
      format_rec(e->lhs, out); out += ", "; format_rec(e->rhs, out); out += ')'; return;
    case Expr::Kind::Abs:
      out += "abs("; format_rec(e->lhs, out); out += ')'; return;
  }
}

}  // namespace

std::string format_expr(const ExprPtr& e) {
  std::string out;
  format_rec(e, out);
  return out;
}

}  // namespace condmodel
