#include "condmodel/eval.hpp"

#include <algorithm>
#include <optional>

namespace condmodel {

Assignment Assignment::with_num(const std::string& name, CondNat value) const {
  require_same_space(space_, value.space());
  Assignment out = *this;
  out.nums_.insert_or_assign(name, std::move(value));
  return out;
}

Assignment Assignment::with_set(const std::string& name, CondSet value) const {
  require_same_space(space_, value.space());
  Assignment out = *this;
  out.sets_.insert_or_assign(name, std::move(value));
  return out;
}

const CondNat& Assignment::num(const std::string& name) const {
  auto it = nums_.find(name);
  if (it == nums_.end())
    throw Error(ErrorCode::UnboundVariable, "number variable '" + name + "' is not assigned");
  return it->second;
}

const CondSet& Assignment::set(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end())
    throw Error(ErrorCode::UnboundVariable, "set variable '" + name + "' is not assigned");
  return it->second;
}

bool Assignment::has_num(const std::string& name) const { return nums_.count(name) != 0; }
bool Assignment::has_set(const std::string& name) const { return sets_.count(name) != 0; }

// ---------------------------------------------------------------------------
// Atom-local evaluation. Truth at an atom depends only on the assignment's
// values at that atom, so quantifiers factorize: number quantifiers scan
// scalar values 0..B-1 and set quantifiers scan subsets of {0..Bset-1}
// encoded as bitmasks, with mask 0 meaning "atom outside the set's carrier".

namespace {

struct AtomSetVal {
  bool off = true;        // atom outside the carrier
  Fiber fiber;            // meaningful when !off
  bool quantified = false;
};

struct AtomEnv {
  std::size_t atom = 0;
  std::uint32_t num_bound = 0;
  std::uint32_t set_bound = 0;
  std::map<std::string, Int> nums;
  std::map<std::string, AtomSetVal> sets;
  EvalWarnings* warnings = nullptr;
};

Fiber mask_fiber(std::uint64_t mask) {
  std::vector<std::uint64_t> elems;
  for (std::uint64_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) elems.push_back(i);
  return Fiber::finite(std::move(elems));
}

Int term_at(const TermPtr& t, const AtomEnv& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Var: {
      auto it = env.nums.find(t->name);
      if (it == env.nums.end())
        throw Error(ErrorCode::UnboundVariable,
                    "number variable '" + t->name + "' is not assigned");
      return it->second;
    }
    case Term::Kind::Plus: return term_at(t->lhs, env) + term_at(t->rhs, env);
    case Term::Kind::Times: return term_at(t->lhs, env) * term_at(t->rhs, env);
  }
  return 0;
}

bool truth_at(const FormulaPtr& f, AtomEnv& env) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return term_at(f->t1, env) == term_at(f->t2, env);
    case Formula::Kind::Lt:
      return term_at(f->t1, env) < term_at(f->t2, env);
    case Formula::Kind::In: {
      auto it = env.sets.find(f->var);
      if (it == env.sets.end())
        throw Error(ErrorCode::UnboundVariable, "set variable '" + f->var + "' is not assigned");
      const AtomSetVal& sv = it->second;
      Int v = term_at(f->t1, env);
      if (sv.quantified && v >= env.set_bound && env.warnings) {
        env.warnings->bound_too_small = true;
        env.warnings->notes.push_back("value " + v.get_str() + " tested against quantified set '" +
                                      f->var + "' exceeds set bound");
      }
      if (sv.off) return false;
      if (!v.fits_ulong_p()) return sv.fiber.is_cofinite();
      return sv.fiber.contains(v.get_ui());
    }
    case Formula::Kind::Not:
      return !truth_at(f->f1, env);
    case Formula::Kind::And:
      return truth_at(f->f1, env) && truth_at(f->f2, env);
    case Formula::Kind::Or:
      return truth_at(f->f1, env) || truth_at(f->f2, env);
    case Formula::Kind::Implies:
      return !truth_at(f->f1, env) || truth_at(f->f2, env);
    case Formula::Kind::Iff:
      return truth_at(f->f1, env) == truth_at(f->f2, env);
    case Formula::Kind::ExistsNum:
    case Formula::Kind::ForallNum: {
      bool exists = f->kind == Formula::Kind::ExistsNum;
      auto saved = env.nums.find(f->var) != env.nums.end()
                       ? std::optional<Int>(env.nums[f->var])
                       : std::nullopt;
      bool result = !exists;
      for (std::uint32_t v = 0; v < env.num_bound; ++v) {
        env.nums[f->var] = v;
        bool t = truth_at(f->f1, env);
        if (exists && t) { result = true; break; }
        if (!exists && !t) { result = false; break; }
      }
      if (saved) env.nums[f->var] = *saved; else env.nums.erase(f->var);
      return result;
    }
    case Formula::Kind::ExistsSet:
    case Formula::Kind::ForallSet: {
      bool exists = f->kind == Formula::Kind::ExistsSet;
      auto it = env.sets.find(f->var);
      auto saved = it != env.sets.end() ? std::optional<AtomSetVal>(it->second) : std::nullopt;
      bool result = !exists;
      std::uint64_t domain = std::uint64_t{1} << env.set_bound;
      for (std::uint64_t mask = 0; mask < domain; ++mask) {
        AtomSetVal sv;
        sv.off = mask == 0;
        sv.quantified = true;
        if (!sv.off) sv.fiber = mask_fiber(mask);
        env.sets[f->var] = std::move(sv);
        bool t = truth_at(f->f1, env);
        if (exists && t) { result = true; break; }
        if (!exists && !t) { result = false; break; }
      }
      if (saved) env.sets[f->var] = *saved; else env.sets.erase(f->var);
      return result;
    }
  }
  return false;
}

AtomEnv atom_env(const Assignment& beta, const FormulaPtr& f, std::size_t atom,
                 const Bounds& bounds, EvalWarnings* warnings) {
  AtomEnv env;
  env.atom = atom;
  env.num_bound = bounds.num_bound;
  env.set_bound = bounds.set_bound;
  env.warnings = warnings;
  FreeVars fv = free_vars(f);
  for (const auto& name : fv.nums)
    if (beta.has_num(name)) env.nums.emplace(name, beta.num(name).at(atom));
  for (const auto& name : fv.sets) {
    if (!beta.has_set(name)) continue;
    const CondSet& s = beta.set(name);
    AtomSetVal sv;
    sv.off = !s.carrier().contains(atom);
    if (!sv.off) sv.fiber = s.fiber(atom);
    env.sets.emplace(name, std::move(sv));
  }
  return env;
}

}  // namespace

CondNat eval_term(const TermPtr& t, const Assignment& beta) {
  const SpacePtr& space = beta.space();
  std::vector<Int> values(space->atom_count());
  std::set<std::string> vars;
  collect_term_vars(t, vars);
  for (std::size_t a = 0; a < values.size(); ++a) {
    AtomEnv env;
    for (const auto& name : vars) env.nums.emplace(name, beta.num(name).at(a));
    values[a] = term_at(t, env);
  }
  return CondNat(space, std::move(values));
}

Event eval_formula(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds,
                   EvalWarnings* warnings) {
  const SpacePtr& space = beta.space();
  Event out = Event::none(space);
  for (std::size_t a = 0; a < space->atom_count(); ++a) {
    AtomEnv env = atom_env(beta, f, a, bounds, warnings);
    if (truth_at(f, env)) out = out.with_atom(a, true);
  }
  return out;
}

Witness witness_exists(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds) {
  const SpacePtr& space = beta.space();
  if (f->kind == Formula::Kind::ExistsNum) {
    std::vector<Int> witness(space->atom_count(), 0);
    Event event = Event::none(space);
    for (std::size_t a = 0; a < space->atom_count(); ++a) {
      AtomEnv env = atom_env(beta, f->f1, a, bounds, nullptr);
      for (std::uint32_t v = 0; v < bounds.num_bound; ++v) {
        env.nums[f->var] = v;
        if (truth_at(f->f1, env)) {
          witness[a] = v;  // minimal per-atom witness
          event = event.with_atom(a, true);
          break;
        }
      }
      env.nums.erase(f->var);
    }
    return Witness{CondNat(space, std::move(witness)), event};
  }
  if (f->kind == Formula::Kind::ExistsSet) {
    std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
    Event carrier = Event::none(space);
    Event event = Event::none(space);
    std::uint64_t domain = std::uint64_t{1} << bounds.set_bound;
    for (std::size_t a = 0; a < space->atom_count(); ++a) {
      AtomEnv env = atom_env(beta, f->f1, a, bounds, nullptr);
      for (std::uint64_t mask = 0; mask < domain; ++mask) {
        AtomSetVal sv;
        sv.off = mask == 0;
        sv.quantified = true;
        if (!sv.off) sv.fiber = mask_fiber(mask);
        env.sets[f->var] = std::move(sv);
        if (truth_at(f->f1, env)) {
          event = event.with_atom(a, true);
          if (mask != 0) {
            fibers[a] = mask_fiber(mask);
            carrier = carrier.with_atom(a, true);
          }
          break;
        }
      }
      env.sets.erase(f->var);
    }
    return Witness{CondSet::make_stable(space, fibers, carrier), event};
  }
  throw Error(ErrorCode::NotExistential, "witness_exists needs an existential formula");
}

CondSet comprehend(const FormulaPtr& phi, const std::string& num_var, const Assignment& beta,
                   const Bounds& bounds, const std::string& set_var) {
  if (!is_arithmetical(phi))
    throw Error(ErrorCode::NotArithmetical, "comprehension needs an arithmetical formula");
  FreeVars fv = free_vars(phi);
  if (fv.sets.count(set_var))
    throw Error(ErrorCode::FreeSetVariableClash,
                "set variable '" + set_var + "' occurs freely in the comprehension formula");

  const SpacePtr& space = beta.space();
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  Event carrier = Event::none(space);
  for (std::size_t a = 0; a < space->atom_count(); ++a) {
    AtomEnv env = atom_env(beta, phi, a, bounds, nullptr);
    std::vector<std::uint64_t> elems;
    for (std::uint32_t v = 0; v < bounds.num_bound; ++v) {
      env.nums[num_var] = v;
      if (truth_at(phi, env)) elems.push_back(v);
    }
    if (!elems.empty()) {
      fibers[a] = Fiber::finite(std::move(elems));
      carrier = carrier.with_atom(a, true);
    }
  }
  CondSet result = CondSet::make_stable(space, fibers, carrier);

  // Postcondition: forall x (x in X <-> phi(x)) holds with value Omega.
  FormulaPtr check = Formula::forall_num(
      num_var, Formula::iff(Formula::in(Term::var(num_var), set_var), phi));
  Event verified = eval_formula(check, beta.with_set(set_var, result), bounds);
  if (!verified.is_all())
    throw Error(ErrorCode::AxiomFailure, "comprehension postcondition failed on " +
                                             event_to_string(verified.complement()));
  return result;
}

Event sequent_validity(const std::vector<FormulaPtr>& gamma, const std::vector<FormulaPtr>& delta,
                       const Assignment& beta, const Bounds& bounds) {
  Event out = Event::none(beta.space());
  for (const FormulaPtr& psi : gamma)
    out = out.join(eval_formula(Formula::not_(psi), beta, bounds));
  for (const FormulaPtr& psi : delta) out = out.join(eval_formula(psi, beta, bounds));
  return out;
}

namespace {

std::string witness_to_string(const Witness& w) {
  if (std::holds_alternative<CondNat>(w.value)) {
    const CondNat& n = std::get<CondNat>(w.value);
    std::string out = "(";
    for (std::size_t a = 0; a < n.space()->atom_count(); ++a) {
      if (a) out += ",";
      out += n.at(a).get_str();
    }
    return out + ")";
  }
  return condset_to_string(std::get<CondSet>(w.value));
}

}  // namespace

TruthReport evaluate_with_report(const FormulaPtr& f, const Assignment& beta,
                                 const Bounds& bounds) {
  TruthReport report;
  report.formula = format_formula(f);
  report.event = eval_formula(f, beta, bounds, &report.warnings);

  // Record glued witnesses for a leading block of existential quantifiers.
  FormulaPtr cur = f;
  Assignment extended = beta;
  while (cur->kind == Formula::Kind::ExistsNum || cur->kind == Formula::Kind::ExistsSet) {
    Witness w = witness_exists(cur, extended, bounds);
    std::string quant = std::string("exists ") + cur->var;
    report.witnesses.emplace_back(quant, witness_to_string(w));
    if (std::holds_alternative<CondNat>(w.value))
      extended = extended.with_num(cur->var, std::get<CondNat>(w.value));
    else
      extended = extended.with_set(cur->var, std::get<CondSet>(w.value));
    cur = cur->f1;
  }
  return report;
}

}  // namespace condmodel
