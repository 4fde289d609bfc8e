#ifndef CONDMODEL_EVAL_HPP
#define CONDMODEL_EVAL_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "condmodel/condset.hpp"
#include "condmodel/formula.hpp"
#include "condmodel/measure.hpp"
#include "condmodel/values.hpp"

namespace condmodel {

// Conditional assignment: number variables to CondNats, set variables to
// CondSets, all over one space. Extension produces a persistent overlay.
class Assignment {
 public:
  explicit Assignment(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }

  Assignment with_num(const std::string& name, CondNat value) const;
  Assignment with_set(const std::string& name, CondSet value) const;

  // Throws UnboundVariable.
  const CondNat& num(const std::string& name) const;
  const CondSet& set(const std::string& name) const;
  bool has_num(const std::string& name) const;
  bool has_set(const std::string& name) const;

 private:
  SpacePtr space_;
  std::map<std::string, CondNat> nums_;
  std::map<std::string, CondSet> sets_;
};

struct Bounds {
  std::uint32_t num_bound = 4;  // number quantifiers range over 0..B-1
  std::uint32_t set_bound = 5;  // set quantifiers range over subsets of 0..Bset-1
};

struct EvalWarnings {
  // Raised when a term value >= set_bound is membership-tested against a
  // quantified set variable; reported, not fatal.
  bool bound_too_small = false;
  std::vector<std::string> notes;
};

CondNat eval_term(const TermPtr& t, const Assignment& beta);

Event eval_formula(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds,
                   EvalWarnings* warnings = nullptr);

struct Witness {
  std::variant<CondNat, CondSet> value;
  Event event;
};

// Maximum principle: one glued witness attaining the existential's event.
// Throws NotExistential if f is not ExistsNum/ExistsSet.
Witness witness_exists(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds);

// Arithmetical comprehension: the set N_phi|A_phi of bounded values
// satisfying phi, per atom. set_var is the comprehension variable; throws
// FreeSetVariableClash if it occurs freely in phi, NotArithmetical if phi
// has set quantifiers. Verifies forall x (x in X <-> phi(x)) = Omega.
CondSet comprehend(const FormulaPtr& phi, const std::string& num_var, const Assignment& beta,
                   const Bounds& bounds, const std::string& set_var = "X");

Event sequent_validity(const std::vector<FormulaPtr>& gamma, const std::vector<FormulaPtr>& delta,
                       const Assignment& beta, const Bounds& bounds);

struct TruthReport {
  std::string formula;
  Event event;
  std::vector<std::pair<std::string, std::string>> witnesses;  // (quantifier, witness)
  EvalWarnings warnings;
};

// Evaluates and, for a leading block of existential quantifiers, records
// glued witnesses.
TruthReport evaluate_with_report(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds);

}  // namespace condmodel

#endif
