#include "condmodel/suites.hpp"

#include <algorithm>

namespace condmodel {

// ---------------------------------------------------------------------------
// Samplers

CondNat sample_cond_nat(const SpacePtr& space, Rng& rng, std::uint64_t max_value) {
  std::vector<Int> values(space->atom_count());
  for (auto& v : values) v = rng.below(max_value + 1);
  return CondNat(space, std::move(values));
}

CondSet sample_cond_set(const SpacePtr& space, Rng& rng, std::uint64_t max_fiber_value) {
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < space->atom_count(); ++a) {
    if (rng.below(4) == 0) continue;  // atom off the carrier
    std::vector<std::uint64_t> elems;
    for (std::uint64_t v = 0; v <= max_fiber_value; ++v)
      if (rng.coin()) elems.push_back(v);
    if (elems.empty()) elems.push_back(rng.below(max_fiber_value + 1));
    // occasionally a cofinite fiber
    fibers[a] = rng.below(8) == 0 ? Fiber::cofinite(std::move(elems))
                                  : Fiber::finite(std::move(elems));
    carrier = carrier.with_atom(a, true);
  }
  return CondSet::make_stable(space, fibers, carrier);
}

Assignment sample_assignment(const SpacePtr& space, const std::vector<std::string>& num_vars,
                             const std::vector<std::string>& set_vars, Rng& rng,
                             const SamplerConfig& cfg) {
  Assignment beta(space);
  for (const auto& name : num_vars)
    beta = beta.with_num(name, sample_cond_nat(space, rng, cfg.max_num_value));
  for (const auto& name : set_vars)
    beta = beta.with_set(name, sample_cond_set(space, rng, cfg.max_fiber_value));
  return beta;
}

namespace {

TermPtr sample_term(const std::vector<std::string>& num_vars, Rng& rng, std::uint32_t depth) {
  if (depth == 0 || rng.below(3) == 0) {
    std::uint64_t pick = rng.below(num_vars.size() + 2);
    if (pick == 0) return Term::zero();
    if (pick == 1) return Term::one();
    return Term::var(num_vars[pick - 2]);
  }
  TermPtr a = sample_term(num_vars, rng, depth - 1);
  TermPtr b = sample_term(num_vars, rng, depth - 1);
  return rng.coin() ? Term::plus(std::move(a), std::move(b))
                    : Term::times(std::move(a), std::move(b));
}

FormulaPtr sample_atomic(const std::vector<std::string>& num_vars,
                         const std::vector<std::string>& set_vars, Rng& rng,
                         const SamplerConfig& cfg) {
  TermPtr t = sample_term(num_vars, rng, cfg.max_term_depth);
  std::uint64_t pick = rng.below(set_vars.empty() ? 2 : 3);
  if (pick == 0) return Formula::eq(std::move(t), sample_term(num_vars, rng, cfg.max_term_depth));
  if (pick == 1) return Formula::lt(std::move(t), sample_term(num_vars, rng, cfg.max_term_depth));
  return Formula::in(std::move(t), set_vars[rng.below(set_vars.size())]);
}

// Bound variables use the reserved q*/Q* namespace, so substitution into
// sampled formulas never captures.
FormulaPtr sample_formula_rec(std::vector<std::string> num_vars,
                              std::vector<std::string> set_vars, Rng& rng,
                              const SamplerConfig& cfg, std::uint32_t quant_budget,
                              std::uint32_t size_budget) {
  if (size_budget == 0) return sample_atomic(num_vars, set_vars, rng, cfg);
  switch (rng.below(quant_budget > 0 ? 7 : 5)) {
    case 1:
      return Formula::not_(
          sample_formula_rec(num_vars, set_vars, rng, cfg, quant_budget, size_budget - 1));
    case 2:
    case 3: {
      FormulaPtr a =
          sample_formula_rec(num_vars, set_vars, rng, cfg, quant_budget, size_budget - 1);
      FormulaPtr b =
          sample_formula_rec(num_vars, set_vars, rng, cfg, quant_budget, size_budget - 1);
      switch (rng.below(4)) {
        case 0: return Formula::and_(std::move(a), std::move(b));
        case 1: return Formula::or_(std::move(a), std::move(b));
        case 2: return Formula::implies(std::move(a), std::move(b));
        default: return Formula::iff(std::move(a), std::move(b));
      }
    }
    case 5: {
      std::string fresh = "q" + std::to_string(quant_budget);
      num_vars.push_back(fresh);
      FormulaPtr body =
          sample_formula_rec(num_vars, set_vars, rng, cfg, quant_budget - 1, size_budget - 1);
      return rng.coin() ? Formula::exists_num(fresh, std::move(body))
                        : Formula::forall_num(fresh, std::move(body));
    }
    case 6: {
      std::string fresh = "Q" + std::to_string(quant_budget);
      set_vars.push_back(fresh);
      FormulaPtr body =
          sample_formula_rec(num_vars, set_vars, rng, cfg, quant_budget - 1, size_budget - 1);
      return rng.coin() ? Formula::exists_set(fresh, std::move(body))
                        : Formula::forall_set(fresh, std::move(body));
    }
    default:
      return sample_atomic(num_vars, set_vars, rng, cfg);
  }
}

}  // namespace

FormulaPtr sample_formula(const std::vector<std::string>& num_vars,
                          const std::vector<std::string>& set_vars, Rng& rng,
                          const SamplerConfig& cfg) {
  return sample_formula_rec(num_vars, set_vars, rng, cfg, cfg.max_quant_depth, 4);
}

FormulaPtr sample_existential(const std::vector<std::string>& num_vars,
                              const std::vector<std::string>& set_vars, Rng& rng,
                              const SamplerConfig& cfg) {
  std::vector<std::string> nums = num_vars;
  nums.push_back("x");
  SamplerConfig inner = cfg;
  inner.max_quant_depth = cfg.max_quant_depth > 0 ? cfg.max_quant_depth - 1 : 0;
  FormulaPtr body;
  do {
    body = sample_formula_rec(nums, set_vars, rng, inner, inner.max_quant_depth, 3);
  } while (!is_arithmetical(body));
  return Formula::exists_num("x", std::move(body));
}

// ---------------------------------------------------------------------------
// Sequent-calculus rules

const char* rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::Weakening: return "weakening";
    case RuleKind::Cut: return "cut";
    case RuleKind::AndLeft: return "and-left";
    case RuleKind::AndRight: return "and-right";
    case RuleKind::NotLeft: return "not-left";
    case RuleKind::NotRight: return "not-right";
    case RuleKind::ForallLeftNum: return "forall-left-num";
    case RuleKind::ForallRightNum: return "forall-right-num";
    case RuleKind::ExistsLeftNum: return "exists-left-num";
    case RuleKind::ExistsRightNum: return "exists-right-num";
    case RuleKind::ForallLeftSet: return "forall-left-set";
    case RuleKind::ForallRightSet: return "forall-right-set";
    case RuleKind::ExistsLeftSet: return "exists-left-set";
    case RuleKind::ExistsRightSet: return "exists-right-set";
  }
  return "?";
}

RuleKind rule_kind_from_name(const std::string& name) {
  for (RuleKind kind : all_rule_kinds())
    if (name == rule_kind_name(kind)) return kind;
  throw Error(ErrorCode::UnknownRule, "unknown rule: " + name);
}

std::vector<RuleKind> all_rule_kinds() {
  return {RuleKind::Weakening,      RuleKind::Cut,            RuleKind::AndLeft,
          RuleKind::AndRight,       RuleKind::NotLeft,        RuleKind::NotRight,
          RuleKind::ForallLeftNum,  RuleKind::ForallRightNum, RuleKind::ExistsLeftNum,
          RuleKind::ExistsRightNum, RuleKind::ForallLeftSet,  RuleKind::ForallRightSet,
          RuleKind::ExistsLeftSet,  RuleKind::ExistsRightSet};
}

namespace {

bool sequent_mentions(const Sequent& s, const std::string& var) {
  for (const auto& f : s.gamma) {
    FreeVars fv = free_vars(f);
    if (fv.nums.count(var) || fv.sets.count(var)) return true;
  }
  for (const auto& f : s.delta) {
    FreeVars fv = free_vars(f);
    if (fv.nums.count(var) || fv.sets.count(var)) return true;
  }
  return false;
}

}  // namespace

void check_side_conditions(const RuleInstance& inst) {
  if (!inst.eigenvariable) return;
  if (sequent_mentions(inst.conclusion, *inst.eigenvariable))
    throw Error(ErrorCode::EigenvariableViolation,
                "eigenvariable '" + *inst.eigenvariable + "' occurs freely in the conclusion");
}

namespace {

// Free-variable pools for sampled instances; the eigenvariables w/W stay
// out of them so the side-condition holds by construction.
const std::vector<std::string> kNumPool = {"u", "v"};
const std::vector<std::string> kSetPool = {"U", "V"};

struct TrialData {
  RuleInstance inst;
  Assignment beta;
  // Eigenvariable rules: the premise must hold under each of these variants
  // of beta (one per element of the bounded quantifier domain). Empty means
  // "check the premise under beta itself".
  std::vector<Assignment> premise_variants;
};

std::vector<FormulaPtr> sample_context(Rng& rng, const SamplerConfig& cfg, std::uint64_t max_len,
                                       bool add_tautology) {
  std::vector<FormulaPtr> out;
  std::uint64_t len = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i)
    out.push_back(sample_formula(kNumPool, kSetPool, rng, cfg));
  if (add_tautology && rng.coin())
    out.push_back(Formula::eq(Term::var("u"), Term::var("u")));  // keeps premises often correct
  return out;
}

CondSet constant_mask_set(const SpacePtr& space, std::uint64_t mask) {
  if (mask == 0) return CondSet::bottom(space);
  std::vector<std::uint64_t> elems;
  for (std::uint64_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) elems.push_back(i);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::finite(elems));
  return CondSet::make_stable(space, fibers, Event::all(space));
}

// A CondSet whose per-atom fiber lies in the bounded set-quantifier domain.
CondSet sample_bounded_set(const SpacePtr& space, Rng& rng, std::uint32_t set_bound) {
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  std::uint64_t domain = std::uint64_t{1} << set_bound;
  for (std::size_t a = 0; a < space->atom_count(); ++a) {
    std::uint64_t mask = rng.below(domain);
    if (mask == 0) continue;
    std::vector<std::uint64_t> elems;
    for (std::uint64_t i = 0; mask >> i; ++i)
      if ((mask >> i) & 1u) elems.push_back(i);
    fibers[a] = Fiber::finite(std::move(elems));
    carrier = carrier.with_atom(a, true);
  }
  return CondSet::make_stable(space, fibers, carrier);
}

TrialData make_trial(RuleKind kind, const SpacePtr& space, const Bounds& bounds, Rng& rng) {
  SamplerConfig cfg;
  cfg.max_quant_depth = 1;
  cfg.max_term_depth = 1;
  cfg.max_num_value = bounds.num_bound;  // free values may exceed the bound
  cfg.max_fiber_value = bounds.set_bound;

  TrialData trial{RuleInstance{kind, {}, {}, std::nullopt}, Assignment(space), {}};
  std::vector<FormulaPtr> gamma = sample_context(rng, cfg, 1, false);
  std::vector<FormulaPtr> delta = sample_context(rng, cfg, 1, true);
  trial.beta = sample_assignment(space, kNumPool, kSetPool, rng, cfg);

  auto left = [&](const FormulaPtr& extra) {
    std::vector<FormulaPtr> g = gamma;
    g.insert(g.begin(), extra);
    return g;
  };
  auto right = [&](const FormulaPtr& extra) {
    std::vector<FormulaPtr> d = delta;
    d.push_back(extra);
    return d;
  };

  switch (kind) {
    case RuleKind::Weakening: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{gamma, delta}};
      trial.inst.conclusion = Sequent{left(phi), delta};
      return trial;
    }
    case RuleKind::Cut: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{gamma, right(phi)}, Sequent{left(phi), delta}};
      trial.inst.conclusion = Sequent{gamma, delta};
      return trial;
    }
    case RuleKind::AndLeft: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      FormulaPtr psi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{left(phi), delta}};
      trial.inst.conclusion = Sequent{left(Formula::and_(phi, psi)), delta};
      return trial;
    }
    case RuleKind::AndRight: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      FormulaPtr psi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{gamma, right(phi)}, Sequent{gamma, right(psi)}};
      trial.inst.conclusion = Sequent{gamma, right(Formula::and_(phi, psi))};
      return trial;
    }
    case RuleKind::NotLeft: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{gamma, right(phi)}};
      trial.inst.conclusion = Sequent{left(Formula::not_(phi)), delta};
      return trial;
    }
    case RuleKind::NotRight: {
      FormulaPtr phi = sample_formula(kNumPool, kSetPool, rng, cfg);
      trial.inst.premises = {Sequent{left(phi), delta}};
      trial.inst.conclusion = Sequent{gamma, right(Formula::not_(phi))};
      return trial;
    }
    case RuleKind::ForallLeftNum:
    case RuleKind::ExistsRightNum: {
      std::vector<std::string> nums = kNumPool;
      nums.push_back("x");
      FormulaPtr body = sample_formula(nums, kSetPool, rng, cfg);
      // the instantiating term's values stay below the number bound so that
      // the bounded quantifier domain covers them
      TermPtr t = rng.below(4) == 0 ? Term::zero() : Term::var("u");
      trial.beta = trial.beta.with_num("u", sample_cond_nat(space, rng, bounds.num_bound - 1));
      FormulaPtr phi_t = subst_num_var(body, "x", t);
      if (kind == RuleKind::ForallLeftNum) {
        trial.inst.premises = {Sequent{left(phi_t), delta}};
        trial.inst.conclusion = Sequent{left(Formula::forall_num("x", body)), delta};
      } else {
        trial.inst.premises = {Sequent{gamma, right(phi_t)}};
        trial.inst.conclusion = Sequent{gamma, right(Formula::exists_num("x", body))};
      }
      return trial;
    }
    case RuleKind::ForallRightNum:
    case RuleKind::ExistsLeftNum: {
      std::vector<std::string> nums = kNumPool;
      nums.push_back("x");
      FormulaPtr body = sample_formula(nums, kSetPool, rng, cfg);
      FormulaPtr phi_w = subst_num_var(body, "x", Term::var("w"));
      trial.inst.eigenvariable = "w";
      if (kind == RuleKind::ForallRightNum) {
        trial.inst.premises = {Sequent{gamma, right(phi_w)}};
        trial.inst.conclusion = Sequent{gamma, right(Formula::forall_num("x", body))};
      } else {
        trial.inst.premises = {Sequent{left(phi_w), delta}};
        trial.inst.conclusion = Sequent{left(Formula::exists_num("x", body)), delta};
      }
      for (std::uint32_t v = 0; v < bounds.num_bound; ++v)
        trial.premise_variants.push_back(trial.beta.with_num("w", CondNat::constant(space, v)));
      return trial;
    }
    case RuleKind::ForallLeftSet:
    case RuleKind::ExistsRightSet: {
      std::vector<std::string> sets = kSetPool;
      sets.push_back("X");
      FormulaPtr body = sample_formula(kNumPool, sets, rng, cfg);
      // instantiate with U, sampled inside the bounded set domain
      trial.beta = trial.beta.with_set("U", sample_bounded_set(space, rng, bounds.set_bound));
      FormulaPtr phi_u = rename_set_var(body, "X", "U");
      if (kind == RuleKind::ForallLeftSet) {
        trial.inst.premises = {Sequent{left(phi_u), delta}};
        trial.inst.conclusion = Sequent{left(Formula::forall_set("X", body)), delta};
      } else {
        trial.inst.premises = {Sequent{gamma, right(phi_u)}};
        trial.inst.conclusion = Sequent{gamma, right(Formula::exists_set("X", body))};
      }
      return trial;
    }
    case RuleKind::ForallRightSet:
    case RuleKind::ExistsLeftSet: {
      std::vector<std::string> sets = kSetPool;
      sets.push_back("X");
      FormulaPtr body = sample_formula(kNumPool, sets, rng, cfg);
      FormulaPtr phi_w = rename_set_var(body, "X", "W");
      trial.inst.eigenvariable = "W";
      if (kind == RuleKind::ForallRightSet) {
        trial.inst.premises = {Sequent{gamma, right(phi_w)}};
        trial.inst.conclusion = Sequent{gamma, right(Formula::forall_set("X", body))};
      } else {
        trial.inst.premises = {Sequent{left(phi_w), delta}};
        trial.inst.conclusion = Sequent{left(Formula::exists_set("X", body)), delta};
      }
      std::uint64_t domain = std::uint64_t{1} << bounds.set_bound;
      for (std::uint64_t mask = 0; mask < domain; ++mask)
        trial.premise_variants.push_back(
            trial.beta.with_set("W", constant_mask_set(space, mask)));
      return trial;
    }
  }
  throw Error(ErrorCode::UnknownRule, "unhandled rule kind");
}

bool sequent_correct(const Sequent& s, const Assignment& beta, const Bounds& bounds) {
  return sequent_validity(s.gamma, s.delta, beta, bounds).is_all();
}

std::string describe_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.gamma.size(); ++i)
    out += (i ? ", " : "") + format_formula(s.gamma[i]);
  out += " -> ";
  for (std::size_t i = 0; i < s.delta.size(); ++i)
    out += (i ? ", " : "") + format_formula(s.delta[i]);
  return out;
}

}  // namespace

RuleReport check_rule(RuleKind kind, const SpacePtr& space, const Bounds& bounds,
                      std::uint64_t trials, Rng& rng) {
  RuleReport report;
  report.kind = kind;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    TrialData data = make_trial(kind, space, bounds, rng);
    check_side_conditions(data.inst);

    bool premises_hold = true;
    if (data.premise_variants.empty()) {
      for (const Sequent& p : data.inst.premises)
        premises_hold = premises_hold && sequent_correct(p, data.beta, bounds);
    } else {
      for (const Assignment& variant : data.premise_variants)
        for (const Sequent& p : data.inst.premises)
          premises_hold = premises_hold && sequent_correct(p, variant, bounds);
    }
    ++report.trials;
    if (!premises_hold) continue;
    ++report.premises_held;
    if (!sequent_correct(data.inst.conclusion, data.beta, bounds)) {
      report.counterexamples.push_back(RuleCounterexample{
          "conclusion fails: " + describe_sequent(data.inst.conclusion), trial});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// ACA0 axiom suite

std::vector<std::pair<std::string, std::string>> basic_axiom_sources() {
  return {
      {"succ-nonzero", "!(x + 1 = 0)"},
      {"succ-injective", "x + 1 = y + 1 -> x = y"},
      {"add-zero", "x + 0 = x"},
      {"add-succ", "x + (y + 1) = (x + y) + 1"},
      {"mul-zero", "x * 0 = 0"},
      {"mul-succ", "x * (y + 1) = (x * y) + x"},
      {"lt-zero", "!(x < 0)"},
      {"lt-succ", "x < y + 1 <-> (x < y | x = y)"},
  };
}

std::vector<std::string> comprehension_corpus() {
  return {
      "x < y",
      "x = x + 1",
      "exists z. z + z = x",
      "exists z. z + z + 1 = x",
      "x in Y",
      "!(x in Y)",
      "x in Y & x < y",
      "exists z. z + x = y",
      "x = y | x < 1",
      "forall z. z < x -> z < y",
  };
}

bool AxiomSuiteReport::all_hold() const {
  for (const auto& r : basic)
    if (!r.holds) return false;
  if (!induction.holds) return false;
  for (const auto& r : comprehension)
    if (!r.holds) return false;
  return true;
}

AxiomSuiteReport axiom_suite(const SpacePtr& space, const Bounds& bounds, std::uint64_t trials,
                             Rng& rng) {
  AxiomSuiteReport report;
  SamplerConfig cfg;
  cfg.max_num_value = bounds.num_bound + 4;  // basic axioms are quantifier-free, any values go
  cfg.max_fiber_value = bounds.set_bound + 2;

  for (const auto& [name, source] : basic_axiom_sources()) {
    FormulaPtr axiom = parse_formula(source);
    bool holds = true;
    for (std::uint64_t t = 0; t < trials && holds; ++t) {
      Assignment beta = sample_assignment(space, {"x", "y"}, {}, rng, cfg);
      holds = eval_formula(axiom, beta, bounds).is_all();
    }
    report.basic.push_back(AxiomResult{name, source, holds});
  }

  {
    // Second-order induction closure, with the set bound staged one past the
    // number bound so the successor step stays inside the fiber domain.
    std::string source =
        "forall X. (0 in X & (forall x. x in X -> x + 1 in X)) -> (forall x. x in X)";
    FormulaPtr closure = parse_formula(source);
    Bounds staged{bounds.num_bound, bounds.num_bound + 1};
    Assignment beta(space);
    report.induction =
        AxiomResult{"induction", source, eval_formula(closure, beta, staged).is_all()};
  }

  for (const std::string& source : comprehension_corpus()) {
    FormulaPtr phi = parse_formula(source);
    bool holds = true;
    for (std::uint64_t t = 0; t < std::min<std::uint64_t>(trials, 20) && holds; ++t) {
      Assignment beta = sample_assignment(space, {"y"}, {"Y"}, rng, cfg);
      try {
        CondSet comprehended = comprehend(phi, "x", beta, bounds);
        (void)comprehended;  // the postcondition is verified inside comprehend
      } catch (const Error&) {
        holds = false;
        break;
      }
      FormulaPtr scheme = Formula::exists_set(
          "X", Formula::forall_num(
                   "x", Formula::iff(Formula::in(Term::var("x"), "X"), phi)));
      holds = eval_formula(scheme, beta, bounds).is_all();
    }
    report.comprehension.push_back(AxiomResult{"comprehension: " + source, source, holds});
  }

  return report;
}

}  // namespace condmodel
