#include "condmodel/formula.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <vector>

namespace condmodel {

TermPtr Term::zero() { return std::make_shared<Term>(Term{Kind::Zero, {}, nullptr, nullptr}); }
TermPtr Term::one() { return std::make_shared<Term>(Term{Kind::One, {}, nullptr, nullptr}); }
TermPtr Term::var(std::string name) {
  return std::make_shared<Term>(Term{Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr Term::plus(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::Plus, {}, std::move(a), std::move(b)});
}
TermPtr Term::times(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::Times, {}, std::move(a), std::move(b)});
}
TermPtr Term::literal(std::uint64_t n) {
  if (n == 0) return zero();
  TermPtr t = one();
  for (std::uint64_t i = 1; i < n; ++i) t = plus(std::move(t), one());
  return t;
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b) {
  return std::make_shared<Formula>(Formula{Kind::Eq, std::move(a), std::move(b), {}, nullptr, nullptr});
}
FormulaPtr Formula::lt(TermPtr a, TermPtr b) {
  return std::make_shared<Formula>(Formula{Kind::Lt, std::move(a), std::move(b), {}, nullptr, nullptr});
}
FormulaPtr Formula::in(TermPtr t, std::string set_var) {
  return std::make_shared<Formula>(
      Formula{Kind::In, std::move(t), nullptr, std::move(set_var), nullptr, nullptr});
}
FormulaPtr Formula::not_(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Kind::Not, nullptr, nullptr, {}, std::move(f), nullptr});
}
FormulaPtr Formula::and_(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Kind::And, nullptr, nullptr, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::or_(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Kind::Or, nullptr, nullptr, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Kind::Implies, nullptr, nullptr, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Kind::Iff, nullptr, nullptr, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::exists_num(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Kind::ExistsNum, nullptr, nullptr, std::move(var), std::move(body), nullptr});
}
FormulaPtr Formula::forall_num(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Kind::ForallNum, nullptr, nullptr, std::move(var), std::move(body), nullptr});
}
FormulaPtr Formula::exists_set(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Kind::ExistsSet, nullptr, nullptr, std::move(var), std::move(body), nullptr});
}
FormulaPtr Formula::forall_set(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Kind::ForallSet, nullptr, nullptr, std::move(var), std::move(body), nullptr});
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident, Number,
  Exists, Forall, In,
  Eq, Lt, Plus, Star, LParen, RParen, Dot,
  Not, And, Or, Implies, Iff,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t number = 0;
  int line = 1;
  int col = 1;
};

bool is_num_var(const std::string& name) {
  return std::islower(static_cast<unsigned char>(name.front()));
}

void check_variable_case(const Token& tok) {
  const std::string& name = tok.text;
  bool lower_lead = std::islower(static_cast<unsigned char>(name.front()));
  for (char c : name) {
    if (!std::isalpha(static_cast<unsigned char>(c))) continue;
    bool lower = std::islower(static_cast<unsigned char>(c));
    if (lower != lower_lead)
      throw Error(ErrorCode::MixedCaseVariable,
                  "variable '" + name + "' mixes upper and lower case (line " +
                      std::to_string(tok.line) + ", col " + std::to_string(tok.col) + ")");
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string s) {
    out.push_back(Token{kind, std::move(s), 0, line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
    int start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "exists") kind = Tok::Exists;
      else if (word == "forall") kind = Tok::Forall;
      else if (word == "in") kind = Tok::In;
      out.push_back(Token{kind, word, 0, line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::uint64_t value = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[j] - '0');
        ++j;
      }
      out.push_back(Token{Tok::Number, std::string(text.substr(i, j - i)), value, line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = (i + 1 < text.size()) ? text.substr(i, 2) : std::string_view{};
    auto three = (i + 2 < text.size()) ? text.substr(i, 3) : std::string_view{};
    if (three == "<->") { push(Tok::Iff, "<->"); i += 3; col += 3; continue; }
    if (two == "->") { push(Tok::Implies, "->"); i += 2; col += 2; continue; }
    switch (c) {
      case '=': push(Tok::Eq, "="); break;
      case '<': push(Tok::Lt, "<"); break;
      case '+': push(Tok::Plus, "+"); break;
      case '*': push(Tok::Star, "*"); break;
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '.': push(Tok::Dot, "."); break;
      case '!': push(Tok::Not, "!"); break;
      case '&': push(Tok::And, "&"); break;
      case '|': push(Tok::Or, "|"); break;
      default:
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line, start_col);
    }
    ++i; ++col;
  }
  out.push_back(Token{Tok::End, "", 0, line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser with backtracking at the term/formula boundary.

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr formula_all() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  TermPtr term_all() {
    TermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind == kind) { ++pos_; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("expected " + expected + ", got " + got, t.line, t.col);
  }
  void expect(Tok kind, const std::string& what) {
    if (!accept(kind)) fail(what);
  }

  // formula := iff-chain; quantifiers at the unary level, body maximal.
  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr f = implies();
    while (accept(Tok::Iff)) f = Formula::iff(std::move(f), implies());
    return f;
  }

  FormulaPtr implies() {
    FormulaPtr f = disj();
    if (accept(Tok::Implies)) return Formula::implies(std::move(f), implies());
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (accept(Tok::Or)) f = Formula::or_(std::move(f), conj());
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    while (accept(Tok::And)) f = Formula::and_(std::move(f), unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return Formula::not_(unary());
    if (peek().kind == Tok::Exists || peek().kind == Tok::Forall) return quantified();
    return atomic();
  }

  FormulaPtr quantified() {
    bool exists = advance().kind == Tok::Exists;
    if (peek().kind != Tok::Ident) fail("a variable after the quantifier");
    Token var = advance();
    check_variable_case(var);
    expect(Tok::Dot, "'.' after the quantified variable");
    FormulaPtr body = formula();  // body extends maximally right
    if (is_num_var(var.text))
      return exists ? Formula::exists_num(var.text, std::move(body))
                    : Formula::forall_num(var.text, std::move(body));
    return exists ? Formula::exists_set(var.text, std::move(body))
                  : Formula::forall_set(var.text, std::move(body));
  }

  FormulaPtr atomic() {
    // Try "term rel term" first; fall back to a parenthesized formula.
    std::size_t save = pos_;
    try {
      return relational();
    } catch (const SyntaxError&) {
      if (toks_[save].kind != Tok::LParen) throw;
      pos_ = save;
    }
    expect(Tok::LParen, "'('");
    FormulaPtr f = formula();
    expect(Tok::RParen, "')'");
    return f;
  }

  FormulaPtr relational() {
    TermPtr lhs = term();
    if (accept(Tok::Eq)) return Formula::eq(std::move(lhs), term());
    if (accept(Tok::Lt)) return Formula::lt(std::move(lhs), term());
    if (accept(Tok::In)) {
      if (peek().kind != Tok::Ident) fail("a set variable after 'in'");
      Token var = advance();
      check_variable_case(var);
      if (is_num_var(var.text))
        throw SyntaxError("'" + var.text + "' is a number variable; 'in' needs a set variable",
                          var.line, var.col);
      return Formula::in(std::move(lhs), var.text);
    }
    fail("'=', '<' or 'in'");
  }

  TermPtr term() {
    TermPtr t = factor();
    while (accept(Tok::Plus)) t = Term::plus(std::move(t), factor());
    return t;
  }

  TermPtr factor() {
    TermPtr t = atom();
    while (accept(Tok::Star)) t = Term::times(std::move(t), atom());
    return t;
  }

  TermPtr atom() {
    if (peek().kind == Tok::Number) {
      // decimal literals expand to 1+1+...; 0 and 1 stay primitive
      return Term::literal(advance().number);
    }
    if (peek().kind == Tok::Ident) {
      Token var = advance();
      check_variable_case(var);
      if (!is_num_var(var.text))
        throw SyntaxError("set variable '" + var.text + "' used as a term", var.line, var.col);
      return Term::var(var.text);
    }
    if (accept(Tok::LParen)) {
      TermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("a term");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(lex(text)).formula_all(); }
TermPtr parse_term(std::string_view text) { return Parser(lex(text)).term_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// term precedence: plus 1, times 2, atoms 3
void print_term(std::ostream& os, const TermPtr& t, int parent_prec) {
  switch (t->kind) {
    case Term::Kind::Zero: os << "0"; return;
    case Term::Kind::One: os << "1"; return;
    case Term::Kind::Var: os << t->name; return;
    case Term::Kind::Plus: {
      bool paren = parent_prec > 1;
      if (paren) os << "(";
      print_term(os, t->lhs, 1);
      os << " + ";
      print_term(os, t->rhs, 2);
      if (paren) os << ")";
      return;
    }
    case Term::Kind::Times: {
      bool paren = parent_prec > 2;
      if (paren) os << "(";
      print_term(os, t->lhs, 2);
      os << " * ";
      print_term(os, t->rhs, 3);
      if (paren) os << ")";
      return;
    }
  }
}

// formula precedence: quantifier 0, iff 1, implies 2, or 3, and 4, not 5, atom 6
void print_formula(std::ostream& os, const FormulaPtr& f, int parent_prec) {
  auto binary = [&](const char* op, int prec, int lprec, int rprec) {
    bool paren = parent_prec > prec;
    if (paren) os << "(";
    print_formula(os, f->f1, lprec);
    os << " " << op << " ";
    print_formula(os, f->f2, rprec);
    if (paren) os << ")";
  };
  switch (f->kind) {
    case Formula::Kind::Eq:
      print_term(os, f->t1, 0); os << " = "; print_term(os, f->t2, 0); return;
    case Formula::Kind::Lt:
      print_term(os, f->t1, 0); os << " < "; print_term(os, f->t2, 0); return;
    case Formula::Kind::In:
      print_term(os, f->t1, 0); os << " in " << f->var; return;
    case Formula::Kind::Not:
      os << "!";
      print_formula(os, f->f1, 5);
      return;
    case Formula::Kind::And: binary("&", 4, 4, 5); return;
    case Formula::Kind::Or: binary("|", 3, 3, 4); return;
    case Formula::Kind::Implies: binary("->", 2, 3, 2); return;  // right-assoc
    case Formula::Kind::Iff: binary("<->", 1, 1, 2); return;
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallNum:
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet: {
      bool exists =
          f->kind == Formula::Kind::ExistsNum || f->kind == Formula::Kind::ExistsSet;
      bool paren = parent_prec > 0;
      if (paren) os << "(";
      os << (exists ? "exists " : "forall ") << f->var << ". ";
      print_formula(os, f->f1, 0);
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string format_term(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, t, 0);
  return os.str();
}

std::string format_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula(os, f, 0);
  return os.str();
}

// ---------------------------------------------------------------------------

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::Var) out.insert(t->name);
  collect_term_vars(t->lhs, out);
  collect_term_vars(t->rhs, out);
}

namespace {

void collect_free(const FormulaPtr& f, FreeVars& fv, std::set<std::string>& bound_nums,
                  std::set<std::string>& bound_sets) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt: {
      std::set<std::string> vars;
      collect_term_vars(f->t1, vars);
      collect_term_vars(f->t2, vars);
      for (const auto& v : vars)
        if (!bound_nums.count(v)) fv.nums.insert(v);
      return;
    }
    case Formula::Kind::In: {
      std::set<std::string> vars;
      collect_term_vars(f->t1, vars);
      for (const auto& v : vars)
        if (!bound_nums.count(v)) fv.nums.insert(v);
      if (!bound_sets.count(f->var)) fv.sets.insert(f->var);
      return;
    }
    case Formula::Kind::Not:
      collect_free(f->f1, fv, bound_nums, bound_sets);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      collect_free(f->f1, fv, bound_nums, bound_sets);
      collect_free(f->f2, fv, bound_nums, bound_sets);
      return;
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallNum: {
      bool added = bound_nums.insert(f->var).second;
      collect_free(f->f1, fv, bound_nums, bound_sets);
      if (added) bound_nums.erase(f->var);
      return;
    }
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet: {
      bool added = bound_sets.insert(f->var).second;
      collect_free(f->f1, fv, bound_nums, bound_sets);
      if (added) bound_sets.erase(f->var);
      return;
    }
  }
}

}  // namespace

FreeVars free_vars(const FormulaPtr& f) {
  FreeVars fv;
  std::set<std::string> bn, bs;
  collect_free(f, fv, bn, bs);
  return fv;
}

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
    case Formula::Kind::In:
      return f;
    case Formula::Kind::Not:
      return Formula::not_(desugar(f->f1));
    case Formula::Kind::And:
      return Formula::and_(desugar(f->f1), desugar(f->f2));
    case Formula::Kind::Or:
      // a | b == !(!a & !b)
      return Formula::not_(
          Formula::and_(Formula::not_(desugar(f->f1)), Formula::not_(desugar(f->f2))));
    case Formula::Kind::Implies:
      // a -> b == !(a & !b)
      return Formula::not_(Formula::and_(desugar(f->f1), Formula::not_(desugar(f->f2))));
    case Formula::Kind::Iff: {
      FormulaPtr a = desugar(f->f1), b = desugar(f->f2);
      return Formula::and_(Formula::not_(Formula::and_(a, Formula::not_(b))),
                           Formula::not_(Formula::and_(b, Formula::not_(a))));
    }
    case Formula::Kind::ExistsNum:
      return Formula::exists_num(f->var, desugar(f->f1));
    case Formula::Kind::ForallNum:
      return Formula::forall_num(f->var, desugar(f->f1));
    case Formula::Kind::ExistsSet:
      return Formula::exists_set(f->var, desugar(f->f1));
    case Formula::Kind::ForallSet:
      return Formula::forall_set(f->var, desugar(f->f1));
  }
  return f;
}

bool is_arithmetical(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet:
      return false;
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
    case Formula::Kind::In:
      return true;
    case Formula::Kind::Not:
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallNum:
      return is_arithmetical(f->f1);
    default:
      return is_arithmetical(f->f1) && is_arithmetical(f->f2);
  }
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Var) return a->name == b->name;
  if (a->kind == Term::Kind::Zero || a->kind == Term::Kind::One) return true;
  return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      return term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
    case Formula::Kind::In:
      return term_equal(a->t1, b->t1) && a->var == b->var;
    case Formula::Kind::Not:
      return formula_equal(a->f1, b->f1);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return formula_equal(a->f1, b->f1) && formula_equal(a->f2, b->f2);
    default:
      return a->var == b->var && formula_equal(a->f1, b->f1);
  }
}

TermPtr subst_in_term(const TermPtr& t, const std::string& var, const TermPtr& replacement) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::One:
      return t;
    case Term::Kind::Var:
      return t->name == var ? replacement : t;
    case Term::Kind::Plus:
      return Term::plus(subst_in_term(t->lhs, var, replacement),
                        subst_in_term(t->rhs, var, replacement));
    case Term::Kind::Times:
      return Term::times(subst_in_term(t->lhs, var, replacement),
                         subst_in_term(t->rhs, var, replacement));
  }
  return t;
}

FormulaPtr subst_num_var(const FormulaPtr& f, const std::string& var, const TermPtr& replacement) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_in_term(f->t1, var, replacement),
                         subst_in_term(f->t2, var, replacement));
    case Formula::Kind::Lt:
      return Formula::lt(subst_in_term(f->t1, var, replacement),
                         subst_in_term(f->t2, var, replacement));
    case Formula::Kind::In:
      return Formula::in(subst_in_term(f->t1, var, replacement), f->var);
    case Formula::Kind::Not:
      return Formula::not_(subst_num_var(f->f1, var, replacement));
    case Formula::Kind::And:
      return Formula::and_(subst_num_var(f->f1, var, replacement),
                           subst_num_var(f->f2, var, replacement));
    case Formula::Kind::Or:
      return Formula::or_(subst_num_var(f->f1, var, replacement),
                          subst_num_var(f->f2, var, replacement));
    case Formula::Kind::Implies:
      return Formula::implies(subst_num_var(f->f1, var, replacement),
                              subst_num_var(f->f2, var, replacement));
    case Formula::Kind::Iff:
      return Formula::iff(subst_num_var(f->f1, var, replacement),
                          subst_num_var(f->f2, var, replacement));
    case Formula::Kind::ExistsNum:
      if (f->var == var) return f;
      return Formula::exists_num(f->var, subst_num_var(f->f1, var, replacement));
    case Formula::Kind::ForallNum:
      if (f->var == var) return f;
      return Formula::forall_num(f->var, subst_num_var(f->f1, var, replacement));
    case Formula::Kind::ExistsSet:
      return Formula::exists_set(f->var, subst_num_var(f->f1, var, replacement));
    case Formula::Kind::ForallSet:
      return Formula::forall_set(f->var, subst_num_var(f->f1, var, replacement));
  }
  return f;
}

FormulaPtr rename_set_var(const FormulaPtr& f, const std::string& from, const std::string& to) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      return f;
    case Formula::Kind::In:
      return f->var == from ? Formula::in(f->t1, to) : f;
    case Formula::Kind::Not:
      return Formula::not_(rename_set_var(f->f1, from, to));
    case Formula::Kind::And:
      return Formula::and_(rename_set_var(f->f1, from, to), rename_set_var(f->f2, from, to));
    case Formula::Kind::Or:
      return Formula::or_(rename_set_var(f->f1, from, to), rename_set_var(f->f2, from, to));
    case Formula::Kind::Implies:
      return Formula::implies(rename_set_var(f->f1, from, to), rename_set_var(f->f2, from, to));
    case Formula::Kind::Iff:
      return Formula::iff(rename_set_var(f->f1, from, to), rename_set_var(f->f2, from, to));
    case Formula::Kind::ExistsNum:
      return Formula::exists_num(f->var, rename_set_var(f->f1, from, to));
    case Formula::Kind::ForallNum:
      return Formula::forall_num(f->var, rename_set_var(f->f1, from, to));
    case Formula::Kind::ExistsSet:
      if (f->var == from) return f;
      return Formula::exists_set(f->var, rename_set_var(f->f1, from, to));
    case Formula::Kind::ForallSet:
      if (f->var == from) return f;
      return Formula::forall_set(f->var, rename_set_var(f->f1, from, to));
  }
  return f;
}

std::vector<FormulaPtr> parse_formula_file(std::string_view text) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
    if (!blank) {
      try {
        out.push_back(parse_formula(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.what(), line_no, e.col());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace condmodel
