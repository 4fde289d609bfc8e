// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Oracles here are independent of the code paths they certify:
// quantifiers are re-evaluated by glued enumeration, argmin by a fresh grid
// scan, and the set-algebra laws by exhaustive small-universe enumeration.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "condmodel/analysis.hpp"
#include "condmodel/serialize.hpp"
#include "condmodel/suites.hpp"

using namespace condmodel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SpacePtr uniform_space(std::size_t k) {
  return MeasureSpace::make(std::vector<Rat>(k, Rat(1, static_cast<unsigned long>(k))));
}

// ---------------------------------------------------------------------------
// 1. Axiom suite on random spaces

Outcome criterion_axioms() {
  Outcome out;
  Rng rng(101);
  for (int i = 0; i < 20; ++i) {
    std::size_t k = 1 + rng.below(5);
    std::vector<Rat> weights;
    for (std::size_t a = 0; a < k; ++a)
      weights.emplace_back(1 + rng.below(9), 1 + rng.below(4));
    for (auto& w : weights) w.canonicalize();
    auto space = MeasureSpace::make(weights);
    AxiomSuiteReport report = axiom_suite(space, Bounds{4, 5}, 200, rng);
    if (!report.all_hold()) {
      out.fail("axiom failure on space " + std::to_string(i));
      return out;
    }
  }
  out.detail = "20 spaces, 200 assignments each";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Sequent rule trials

Outcome criterion_rules() {
  Outcome out;
  Rng rng(202);
  auto space = uniform_space(2);
  std::uint64_t total = 0, held = 0;
  for (RuleKind kind : all_rule_kinds()) {
    RuleReport report = check_rule(kind, space, Bounds{3, 3}, 720, rng);
    total += report.trials;
    held += report.premises_held;
    if (!report.passed())
      out.fail(std::string(rule_kind_name(kind)) + ": " +
               report.counterexamples.front().description);
    if (report.premises_held == 0)
      out.fail(std::string(rule_kind_name(kind)) + ": vacuous (no premise-correct trials)");
  }
  if (total < 10000) out.fail("only " + std::to_string(total) + " trials");
  out.detail = std::to_string(total) + " trials, " + std::to_string(held) + " premise-correct";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Maximum principle

Outcome criterion_max_principle() {
  Outcome out;
  Rng rng(303);
  auto space = uniform_space(2);
  Bounds bounds{3, 3};
  SamplerConfig cfg;
  cfg.max_num_value = 4;
  cfg.max_fiber_value = 3;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f;
    if (i % 10 < 7) {
      f = sample_existential({"y"}, {"Y"}, rng, cfg);
    } else {
      f = Formula::exists_set("X", sample_formula({"y"}, {"X", "Y"}, rng, cfg));
    }
    Assignment beta = sample_assignment(space, {"y"}, {"Y"}, rng, cfg);
    Event whole = eval_formula(f, beta, bounds);
    Witness w = witness_exists(f, beta, bounds);
    Assignment at = f->kind == Formula::Kind::ExistsNum
                        ? beta.with_num(f->var, std::get<CondNat>(w.value))
                        : beta.with_set(f->var, std::get<CondSet>(w.value));
    Event attained = eval_formula(f->f1, at, bounds);
    if (w.event != whole || attained != whole) {
      out.fail("witness misses the event for: " + format_formula(f));
      return out;
    }
    ++checked;
  }
  out.detail = std::to_string(checked) + " existentials";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Conditional-set algebra, exhaustive at small universe

// All CondSets over the space whose fibers are subsets of {0..3}; the empty
// subset puts the atom off the carrier.
std::vector<CondSet> enumerate_sets(const SpacePtr& space) {
  std::size_t k = space->atom_count();
  std::vector<CondSet> all;
  std::vector<std::uint32_t> masks(k, 0);
  for (;;) {
    Event carrier = Event::none(space);
    std::vector<Fiber> fibers(k, Fiber::empty());
    for (std::size_t a = 0; a < k; ++a) {
      if (!masks[a]) continue;
      std::vector<std::uint64_t> elems;
      for (std::uint64_t v = 0; v < 4; ++v)
        if ((masks[a] >> v) & 1u) elems.push_back(v);
      fibers[a] = Fiber::finite(std::move(elems));
      carrier = carrier.with_atom(a, true);
    }
    all.push_back(CondSet::make_stable(space, fibers, carrier));
    std::size_t a = 0;
    while (a < k && ++masks[a] == 16) masks[a++] = 0;
    if (a == k) break;
  }
  return all;
}

std::vector<CondNat> enumerate_nats(const SpacePtr& space, std::uint64_t bound) {
  std::size_t k = space->atom_count();
  std::vector<CondNat> all;
  std::vector<std::uint64_t> vals(k, 0);
  for (;;) {
    std::vector<Int> v(vals.begin(), vals.end());
    all.emplace_back(space, std::move(v));
    std::size_t a = 0;
    while (a < k && ++vals[a] == bound) vals[a++] = 0;
    if (a == k) break;
  }
  return all;
}

Outcome criterion_set_algebra() {
  Outcome out;
  for (std::size_t k = 1; k <= 3 && out.pass; ++k) {
    auto space = uniform_space(k);
    std::vector<CondSet> all = enumerate_sets(space);
    CondSet top = CondSet::full(space, Event::all(space));
    CondSet bottom = CondSet::bottom(space);

    std::vector<CondSet> comps;
    comps.reserve(all.size());
    for (const CondSet& n : all) comps.push_back(cond_complement(n));

    // unary laws over every set
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (cond_complement(comps[i]) != all[i]) out.fail("double complement");
      if (!cond_intersect(all[i], comps[i]).is_bottom()) out.fail("N meet ~N != bottom");
      if (seq_union({all[i], comps[i]}) != top) out.fail("N join ~N != top");
      if (cond_intersect(all[i], top) != all[i]) out.fail("meet with top");
      if (seq_union({all[i], bottom}) != all[i]) out.fail("join with bottom");
      if (!includes(bottom, all[i]) || !includes(all[i], top)) out.fail("order bounds");
    }

    // gluing identity over every set, bounded value, and two-piece partition
    std::vector<CondNat> nats = enumerate_nats(space, 5);
    std::vector<Event> halves;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      Event e = Event::none(space);
      for (std::size_t a = 0; a < k; ++a)
        if ((m >> a) & 1u) e = e.with_atom(a, true);
      halves.push_back(e);
    }
    // the identity is atom-local, so the value grid is exhausted at k <= 2;
    // at k = 3 every set still meets every x against a fixed panel of ys
    std::vector<CondNat> ys = nats;
    if (k == 3) {
      ys.clear();
      for (std::size_t step = 0; step < 8; ++step)
        ys.push_back(nats[(step * 17 + 3) % nats.size()]);
    }
    for (const Event& piece : halves) {
      Partition p = validate_partition({piece, piece.complement()});
      for (const CondSet& n : all) {
        for (const CondNat& x : nats) {
          for (const CondNat& y : ys) {
            Event glued = member(concat_values({x, y}, p), n);
            Event expected =
                member(x, n).meet(piece).join(member(y, n).meet(piece.complement()));
            if (glued != expected) {
              out.fail("gluing identity at k=" + std::to_string(k));
              break;
            }
          }
          if (!out.pass) break;
        }
        if (!out.pass) break;
      }
      if (!out.pass) break;
      if (k == 3) break;  // one partition suffices at the big universe
    }

    // pairwise laws: full battery at k <= 2; at k = 3 the heavy loop keeps
    // De Morgan and order monotonicity, whose companions follow atom-locally
    // from the k <= 2 exhaustion plus double complement above
    for (std::size_t i = 0; i < all.size() && out.pass; ++i) {
      for (std::size_t j = (k == 3 ? i : 0); j < all.size(); ++j) {
        CondSet meet = cond_intersect(all[i], all[j]);
        if (cond_complement(meet) != seq_union({comps[i], comps[j]}))
          out.fail("De Morgan (meet)");
        if (k <= 2) {
          CondSet join = seq_union({all[i], all[j]});
          if (cond_complement(join) != cond_intersect(comps[i], comps[j]))
            out.fail("De Morgan (join)");
          if (!includes(meet, all[i])) out.fail("meet below operand");
          if (!includes(all[i], join)) out.fail("operand below join");
          if (cond_intersect(all[j], all[i]) != meet) out.fail("meet commutativity");
          if (seq_union({all[j], all[i]}) != join) out.fail("join commutativity");
          if (cond_intersect(all[i], join) != all[i]) out.fail("absorption");
          if (seq_union({all[i], meet}) != all[i]) out.fail("absorption (dual)");
          if (includes(all[i], all[j]) != (meet == all[i])) out.fail("order vs meet");
        }
        if (!out.pass) break;
      }
    }

    // associativity and distributivity, exhaustive at k = 1
    if (k == 1) {
      for (const CondSet& a : all)
        for (const CondSet& b : all)
          for (const CondSet& c : all) {
            if (cond_intersect(cond_intersect(a, b), c) !=
                cond_intersect(a, cond_intersect(b, c)))
              out.fail("meet associativity");
            if (seq_union({a, b, c}) != seq_union({seq_union({a, b}), c}))
              out.fail("join associativity");
            if (cond_intersect(a, seq_union({b, c})) !=
                seq_union({cond_intersect(a, b), cond_intersect(a, c)}))
              out.fail("distributivity");
            if (!out.pass) break;
          }
    }
  }
  out.detail = "fibers within {0..3}, k = 1..3";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Factorized evaluation vs glued-witness enumeration

// Reference evaluator: quantifiers range over explicitly glued objects, so
// its joins are taken in the Boolean algebra rather than per atom.
Event oracle_eval(const FormulaPtr& f, const Assignment& beta, const Bounds& bounds,
                  const std::vector<CondNat>& nat_domain,
                  const std::vector<CondSet>& set_domain) {
  const SpacePtr& space = beta.space();
  switch (f->kind) {
    case Formula::Kind::Eq:
      return compare(eval_term(f->t1, beta), eval_term(f->t2, beta)).eq;
    case Formula::Kind::Lt:
      return compare(eval_term(f->t1, beta), eval_term(f->t2, beta)).lt;
    case Formula::Kind::In:
      return member(eval_term(f->t1, beta), beta.set(f->var));
    case Formula::Kind::Not:
      return oracle_eval(f->f1, beta, bounds, nat_domain, set_domain).complement();
    case Formula::Kind::And:
      return oracle_eval(f->f1, beta, bounds, nat_domain, set_domain)
          .meet(oracle_eval(f->f2, beta, bounds, nat_domain, set_domain));
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return oracle_eval(desugar(f), beta, bounds, nat_domain, set_domain);
    case Formula::Kind::ExistsNum: {
      Event e = Event::none(space);
      for (const CondNat& n : nat_domain)
        e = e.join(oracle_eval(f->f1, beta.with_num(f->var, n), bounds, nat_domain,
                               set_domain));
      return e;
    }
    case Formula::Kind::ForallNum: {
      Event e = Event::all(space);
      for (const CondNat& n : nat_domain)
        e = e.meet(oracle_eval(f->f1, beta.with_num(f->var, n), bounds, nat_domain,
                               set_domain));
      return e;
    }
    case Formula::Kind::ExistsSet: {
      Event e = Event::none(space);
      for (const CondSet& n : set_domain)
        e = e.join(oracle_eval(f->f1, beta.with_set(f->var, n), bounds, nat_domain,
                               set_domain));
      return e;
    }
    case Formula::Kind::ForallSet: {
      Event e = Event::all(space);
      for (const CondSet& n : set_domain)
        e = e.meet(oracle_eval(f->f1, beta.with_set(f->var, n), bounds, nat_domain,
                               set_domain));
      return e;
    }
  }
  return Event::none(space);
}

// All CondSets with per-atom fibers among the subsets of {0..bound-1}.
std::vector<CondSet> glued_set_domain(const SpacePtr& space, std::uint32_t bound) {
  std::size_t k = space->atom_count();
  std::uint64_t options = std::uint64_t{1} << bound;
  std::vector<CondSet> all;
  std::vector<std::uint64_t> masks(k, 0);
  for (;;) {
    Event carrier = Event::none(space);
    std::vector<Fiber> fibers(k, Fiber::empty());
    for (std::size_t a = 0; a < k; ++a) {
      if (!masks[a]) continue;
      std::vector<std::uint64_t> elems;
      for (std::uint64_t v = 0; v < bound; ++v)
        if ((masks[a] >> v) & 1u) elems.push_back(v);
      fibers[a] = Fiber::finite(std::move(elems));
      carrier = carrier.with_atom(a, true);
    }
    all.push_back(CondSet::make_stable(space, fibers, carrier));
    std::size_t a = 0;
    while (a < k && ++masks[a] == options) masks[a++] = 0;
    if (a == k) break;
  }
  return all;
}

Outcome criterion_factorization() {
  Outcome out;
  Rng rng(505);
  Bounds bounds{3, 3};
  SamplerConfig cfg;
  cfg.max_quant_depth = 2;
  cfg.max_term_depth = 1;
  cfg.max_num_value = 3;
  cfg.max_fiber_value = 2;
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = 1 + rng.below(2);
    auto space = uniform_space(k);
    std::vector<CondNat> nat_domain = enumerate_nats(space, bounds.num_bound);
    std::vector<CondSet> set_domain = glued_set_domain(space, bounds.set_bound);
    FormulaPtr f = sample_formula({"u", "v"}, {"U"}, rng, cfg);
    Assignment beta = sample_assignment(space, {"u", "v"}, {"U"}, rng, cfg);
    Event fast = eval_formula(f, beta, bounds);
    Event slow = oracle_eval(f, beta, bounds, nat_domain, set_domain);
    if (fast != slow) {
      out.fail("mismatch on: " + format_formula(f));
      return out;
    }
  }
  out.detail = "1000 formulas vs glued enumeration";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Bolzano-Weierstrass fixtures

struct BwFixture {
  std::vector<std::string> exprs;
  std::vector<Rat> analytic;  // exact limsup per atom
};

Outcome criterion_bw() {
  Outcome out;
  std::vector<std::string> pool = {
      "1 - 2*mod(k,2)",
      "1/(k+1)",
      "5",
      "mod(k,3)",
      "(1 - 2*mod(k,2)) + 1/(k+1)",
      "2 - 1/(k+1)",
      "mod(k,2) * (1 - 1/(k+1))",
      "-1/(k+1)",
      "(1 - 2*mod(k,2)) / (k+1)",
      "3 + (1 - 2*mod(k,2))/(k+2)",
  };
  std::vector<Rat> analytic = {Rat(1), Rat(0),  Rat(5), Rat(2), Rat(1),
                               Rat(2), Rat(1),  Rat(0), Rat(0), Rat(3)};

  const std::uint64_t horizon = 2000, window = 12;
  const Rat tol(1, horizon - window);  // certified: every tail is within 1/(T-w) of its limit
  std::vector<Rat> eps = {Rat(1, 2), Rat(1, 4), Rat(1, 10)};

  int fixtures = 0;
  for (int i = 0; i < 20; ++i) {
    std::size_t k = 1 + static_cast<std::size_t>(i % 3);
    std::vector<std::string> exprs;
    std::vector<Rat> truth;
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t g = (i * 3 + a * 7) % pool.size();
      exprs.push_back(pool[g]);
      truth.push_back(analytic[g]);
    }
    auto space = uniform_space(k);
    CondSequence seq = CondSequence::from_expressions(space, exprs);

    CondReal est = limsup(seq, horizon, window);
    for (std::size_t a = 0; a < k; ++a) {
      Rat d = est.at(a) - truth[a];
      if (d < 0) d = -d;
      if (d > tol) out.fail("limsup estimate off at fixture " + std::to_string(i));
    }

    CondReal target(space, truth);
    std::vector<CondNat> idx = bw_subsequence(seq, target, eps, horizon);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t a = 0; a < k; ++a) {
        if (j > 0 && !(idx[j].at(a) > idx[j - 1].at(a)))
          out.fail("indices not strictly increasing");
        Rat v = seq.at(a, idx[j].at(a).get_ui());
        Rat d = v - truth[a];
        if (d < 0) d = -d;
        if (d > eps[j]) out.fail("epsilon bound violated");
      }
    }
    ++fixtures;
  }
  out.detail = std::to_string(fixtures) + " fixtures, horizon 2000";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Argmin vs exhaustive grid oracle

ExprPtr random_integrand(Rng& rng, std::size_t dim, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    if (rng.coin()) return parse_expr("x" + std::to_string(1 + rng.below(dim)));
    long num = static_cast<long>(rng.below(9)) - 4;
    long den = 1 + rng.below(2);
    return parse_expr(std::to_string(num) + "/" + std::to_string(den));
  }
  ExprPtr a = random_integrand(rng, dim, depth - 1);
  ExprPtr b = random_integrand(rng, dim, depth - 1);
  switch (rng.below(6)) {
    case 0: return parse_expr("(" + format_expr(a) + ") + (" + format_expr(b) + ")");
    case 1: return parse_expr("(" + format_expr(a) + ") - (" + format_expr(b) + ")");
    case 2: return parse_expr("(" + format_expr(a) + ") * (" + format_expr(b) + ")");
    case 3: return parse_expr("min(" + format_expr(a) + ", " + format_expr(b) + ")");
    case 4: return parse_expr("max(" + format_expr(a) + ", " + format_expr(b) + ")");
    default: return parse_expr("abs(" + format_expr(a) + ")");
  }
}

Outcome criterion_argmin() {
  Outcome out;
  Rng rng(707);
  for (int i = 0; i < 50; ++i) {
    std::size_t k = 1 + rng.below(4);
    auto space = uniform_space(k);
    CompactField field{space, std::vector<std::vector<Box>>(k), std::vector<Rat>(k),
                       std::vector<std::size_t>(k)};
    Integrand f{space, std::vector<ExprPtr>(k)};
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t dim = 1 + rng.below(3);
      field.dim[a] = dim;
      field.delta[a] = Rat(1, 1 + rng.below(3));
      std::size_t nboxes = 1 + rng.below(2);
      for (std::size_t b = 0; b < nboxes; ++b) {
        Box box;
        for (std::size_t d = 0; d < dim; ++d) {
          Rat lo(static_cast<long>(rng.below(7)) - 3, 1 + rng.below(2));
          lo.canonicalize();
          Rat hi = lo + field.delta[a] * Rat(static_cast<unsigned long>(rng.below(4)));
          hi.canonicalize();
          box.lo.push_back(lo);
          box.hi.push_back(hi);
        }
        field.boxes[a].push_back(std::move(box));
      }
      f.exprs[a] = random_integrand(rng, dim, 2);
    }

    ArgminResult result = argmin(field, f);

    // independent oracle: regenerate the grid and scan it, tracking the
    // minimum value and the lexicographically smallest point attaining it
    for (std::size_t a = 0; a < k; ++a) {
      std::set<std::vector<Rat>> grid;
      for (const Box& box : field.boxes[a]) {
        std::vector<std::vector<Rat>> axes(field.dim[a]);
        for (std::size_t d = 0; d < field.dim[a]; ++d) {
          for (Rat v = box.lo[d]; v < box.hi[d]; v += field.delta[a]) {
            Rat c = v;
            c.canonicalize();
            axes[d].push_back(c);
          }
          axes[d].push_back(box.hi[d]);
        }
        std::vector<std::size_t> idx(field.dim[a], 0);
        for (;;) {
          std::vector<Rat> p(field.dim[a]);
          for (std::size_t d = 0; d < field.dim[a]; ++d) p[d] = axes[d][idx[d]];
          grid.insert(std::move(p));
          std::size_t d = field.dim[a];
          bool done = true;
          while (d > 0) {
            --d;
            if (++idx[d] < axes[d].size()) {
              done = false;
              break;
            }
            idx[d] = 0;
          }
          if (done) break;
        }
      }
      if (grid.size() > 1000) {
        out.fail("scenario exceeds the grid budget");
        return out;
      }
      bool first = true;
      Rat best;
      std::vector<Rat> best_point;
      for (const auto& p : grid) {
        ExprEnv env;
        env.coords = p;
        Rat v = eval_expr(f.exprs[a], env);
        if (first || v < best) {
          best = v;
          best_point = p;
        }
        first = false;
      }
      if (result.value.at(a) != best || result.point.coords[a] != best_point) {
        out.fail("oracle mismatch at scenario " + std::to_string(i) + ", atom " +
                 std::to_string(a));
        return out;
      }
    }

    std::string once = argmin_result_to_json(result).dump();
    std::string again = argmin_result_to_json(argmin(field, f)).dump();
    if (once != again) {
      out.fail("rerun not byte-identical");
      return out;
    }
  }
  out.detail = "50 scenarios vs exhaustive grid scan";
  return out;
}

// ---------------------------------------------------------------------------
// 8. Parser round-trip

Outcome criterion_roundtrip() {
  Outcome out;
  Rng rng(808);
  SamplerConfig cfg;
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = sample_formula({"u", "v", "y"}, {"U", "Y"}, rng, cfg);
    FormulaPtr reparsed = parse_formula(format_formula(f));
    if (!formula_equal(f, reparsed)) {
      out.fail("round-trip failed: " + format_formula(f));
      return out;
    }
  }
  out.detail = "500 formulas";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
    double budget;  // seconds, 0 = none stated
  };
  const Entry entries[] = {
      {"1 axiom suite", criterion_axioms, 10.0},
      {"2 rule correctness", criterion_rules, 60.0},
      {"3 maximum principle", criterion_max_principle, 0.0},
      {"4 set algebra", criterion_set_algebra, 30.0},
      {"5 factorized evaluation", criterion_factorization, 0.0},
      {"6 bolzano-weierstrass", criterion_bw, 0.0},
      {"7 argmin oracle", criterion_argmin, 0.0},
      {"8 parser round-trip", criterion_roundtrip, 0.0},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entry.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    if (entry.budget > 0 && elapsed > entry.budget)
      out.fail("over time budget (" + std::to_string(elapsed) + "s)");
    std::printf("criterion %-25s %s (%.2fs%s%s)\n", entry.name,
                out.pass ? "PASS" : "FAIL", elapsed, out.detail.empty() ? "" : "; ",
                out.detail.c_str());
    if (!out.pass) ++failures;
  }
  return failures;
}
