#ifndef CONDMODEL_SUITES_HPP
#define CONDMODEL_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "condmodel/eval.hpp"
#include "condmodel/rng.hpp"

namespace condmodel {

// ---------------------------------------------------------------------------
// Random sampling of assignments and formulas, shared by the suites and the
// acceptance harness.

struct SamplerConfig {
  std::uint64_t max_num_value = 6;   // per-atom values drawn from [0, max]
  std::uint64_t max_fiber_value = 6; // fiber elements drawn from [0, max]
  std::uint32_t max_quant_depth = 2;
  std::uint32_t max_term_depth = 2;
};

CondNat sample_cond_nat(const SpacePtr& space, Rng& rng, std::uint64_t max_value);
CondSet sample_cond_set(const SpacePtr& space, Rng& rng, std::uint64_t max_fiber_value);

// Samples values for the given variables on top of an empty assignment.
Assignment sample_assignment(const SpacePtr& space, const std::vector<std::string>& num_vars,
                             const std::vector<std::string>& set_vars, Rng& rng,
                             const SamplerConfig& cfg);

// Random formula over the given variable pools; quantified variables are
// drawn fresh. All sampled formulas are closed over nums+sets.
FormulaPtr sample_formula(const std::vector<std::string>& num_vars,
                          const std::vector<std::string>& set_vars, Rng& rng,
                          const SamplerConfig& cfg);

// Random bounded existential "exists x. body" with body arithmetical.
FormulaPtr sample_existential(const std::vector<std::string>& num_vars,
                              const std::vector<std::string>& set_vars, Rng& rng,
                              const SamplerConfig& cfg);

// ---------------------------------------------------------------------------
// Sequent-calculus rule checking.

enum class RuleKind {
  Weakening,
  Cut,
  AndLeft,
  AndRight,
  NotLeft,
  NotRight,
  ForallLeftNum,
  ForallRightNum,
  ExistsLeftNum,
  ExistsRightNum,
  ForallLeftSet,
  ForallRightSet,
  ExistsLeftSet,
  ExistsRightSet,
};

RuleKind rule_kind_from_name(const std::string& name);  // throws UnknownRule
const char* rule_kind_name(RuleKind kind);
std::vector<RuleKind> all_rule_kinds();

struct Sequent {
  std::vector<FormulaPtr> gamma;
  std::vector<FormulaPtr> delta;
};

struct RuleInstance {
  RuleKind kind;
  std::vector<Sequent> premises;
  Sequent conclusion;
  // Variable the eigenvariable side-condition applies to, when relevant.
  std::optional<std::string> eigenvariable;
};

// Validates the eigenvariable side-condition; throws EigenvariableViolation.
void check_side_conditions(const RuleInstance& inst);

struct RuleCounterexample {
  std::string description;
  std::uint64_t trial;
};

struct RuleReport {
  RuleKind kind;
  std::uint64_t trials = 0;
  std::uint64_t premises_held = 0;  // trials whose premises all held
  std::vector<RuleCounterexample> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

// Randomized rule correctness check: per trial, sample an instance and an
// assignment; whenever every premise evaluates to Omega (over all the
// eigenvariable variants the rule's proof requires), assert the conclusion
// evaluates to Omega.
RuleReport check_rule(RuleKind kind, const SpacePtr& space, const Bounds& bounds,
                      std::uint64_t trials, Rng& rng);

// ---------------------------------------------------------------------------
// ACA0 axiom suite.

struct AxiomResult {
  std::string name;
  std::string formula;
  bool holds = false;
};

struct AxiomSuiteReport {
  std::vector<AxiomResult> basic;
  AxiomResult induction;
  std::vector<AxiomResult> comprehension;
  bool all_hold() const;
};

// The eight basic axioms as L2 formulas, in source form.
std::vector<std::pair<std::string, std::string>> basic_axiom_sources();

// The bundled arithmetical comprehension corpus (10 formulas in x).
std::vector<std::string> comprehension_corpus();

// Evaluates every basic axiom over sampled assignments, the induction
// closure at set_bound = num_bound + 1, and the comprehension scheme for the
// corpus; a failure signals an implementation bug (AxiomFailure).
AxiomSuiteReport axiom_suite(const SpacePtr& space, const Bounds& bounds, std::uint64_t trials,
                             Rng& rng);

}  // namespace condmodel

#endif
