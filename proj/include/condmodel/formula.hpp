#ifndef CONDMODEL_FORMULA_HPP
#define CONDMODEL_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "condmodel/error.hpp"

namespace condmodel {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order terms of L2: 0, 1, number variables, + and *.
struct Term {
  enum class Kind { Zero, One, Var, Plus, Times };

  Kind kind;
  std::string name;  // Var
  TermPtr lhs, rhs;  // Plus, Times

  static TermPtr zero();
  static TermPtr one();
  static TermPtr var(std::string name);
  static TermPtr plus(TermPtr a, TermPtr b);
  static TermPtr times(TermPtr a, TermPtr b);
  // n as 1+1+...+1 (left-assoc); 0 and 1 stay primitive.
  static TermPtr literal(std::uint64_t n);
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    Eq, Lt, In,
    Not, And, Or, Implies, Iff,
    ExistsNum, ForallNum, ExistsSet, ForallSet,
  };

  Kind kind;
  TermPtr t1, t2;        // Eq, Lt; t1 for In
  std::string var;       // In (set var), quantifiers (bound var)
  FormulaPtr f1, f2;

  static FormulaPtr eq(TermPtr a, TermPtr b);
  static FormulaPtr lt(TermPtr a, TermPtr b);
  static FormulaPtr in(TermPtr t, std::string set_var);
  static FormulaPtr not_(FormulaPtr f);
  static FormulaPtr and_(FormulaPtr a, FormulaPtr b);
  static FormulaPtr or_(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists_num(std::string var, FormulaPtr body);
  static FormulaPtr forall_num(std::string var, FormulaPtr body);
  static FormulaPtr exists_set(std::string var, FormulaPtr body);
  static FormulaPtr forall_set(std::string var, FormulaPtr body);
};

// Throws SyntaxError (with position) or Error{MixedCaseVariable}.
FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);

std::string format_formula(const FormulaPtr& f);
std::string format_term(const TermPtr& t);

struct FreeVars {
  std::set<std::string> nums;
  std::set<std::string> sets;
};

FreeVars free_vars(const FormulaPtr& f);
void collect_term_vars(const TermPtr& t, std::set<std::string>& out);

// Rewrites Or/Implies/Iff into And/Not; quantifiers and the rest unchanged.
FormulaPtr desugar(const FormulaPtr& f);

// True iff the formula contains no set quantifiers (set parameters allowed).
bool is_arithmetical(const FormulaPtr& f);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
bool term_equal(const TermPtr& a, const TermPtr& b);

// Substitutes a term for the free occurrences of a number variable; bound
// occurrences shadow. The caller keeps bound and free namespaces apart, so
// no capture check is performed.
TermPtr subst_in_term(const TermPtr& t, const std::string& var, const TermPtr& replacement);
FormulaPtr subst_num_var(const FormulaPtr& f, const std::string& var, const TermPtr& replacement);

// Renames the free occurrences of a set variable.
FormulaPtr rename_set_var(const FormulaPtr& f, const std::string& from, const std::string& to);

// Formula files: one formula per line, '#' comments, blank lines skipped.
std::vector<FormulaPtr> parse_formula_file(std::string_view text);

}  // namespace condmodel

#endif
