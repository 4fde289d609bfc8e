#include "condmodel/analysis.hpp"

#include <algorithm>
#include <utility>

namespace condmodel {

namespace {

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Shrinks [lo, hi] with lo^2 <= s <= hi^2 by bisection until hi - lo <= tol.
std::pair<Rat, Rat> sqrt_enclosure(const Rat& s, const Rat& tol) {
  if (s == 0) return {Rat(0), Rat(0)};
  Rat root;
  if (rational_sqrt_exact(s, &root)) return {root, root};
  Rat lo(0);
  Rat hi = s < 1 ? Rat(1) : Rat(s);  // s >= 1 implies sqrt(s) <= s
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    mid.canonicalize();
    if (mid * mid <= s)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace

NormEnclosure euclid_norm(const RaggedVec& x, const Rat& tol) {
  if (tol <= 0) throw Error(ErrorCode::ConfigError, "norm tolerance must be positive");
  std::size_t k = x.space->atom_count();
  std::vector<Rat> lo(k), hi(k);
  for (std::size_t a = 0; a < k; ++a) {
    Rat s(0);
    for (const Rat& c : x.coords[a]) s += c * c;
    auto [l, h] = sqrt_enclosure(s, tol);
    lo[a] = std::move(l);
    hi[a] = std::move(h);
  }
  return NormEnclosure{CondReal(x.space, std::move(lo)), CondReal(x.space, std::move(hi))};
}

CondSequence::CondSequence(SpacePtr space, std::vector<Generator> gens)
    : space_(std::move(space)), gens_(std::move(gens)) {
  if (gens_.size() != space_->atom_count())
    throw Error(ErrorCode::LengthMismatch, "one generator per atom required");
}

CondSequence CondSequence::from_expressions(SpacePtr space,
                                            const std::vector<std::string>& exprs) {
  if (exprs.size() != space->atom_count())
    throw Error(ErrorCode::LengthMismatch, "one generator expression per atom required");
  std::vector<Generator> gens;
  gens.reserve(exprs.size());
  for (const std::string& src : exprs) {
    ExprPtr e = parse_expr(src);
    gens.push_back([e](std::uint64_t k) {
      Rat kv(static_cast<unsigned long>(k));
      ExprEnv env;
      env.var = &kv;
      env.var_name = "k";
      return eval_expr(e, env);
    });
  }
  return CondSequence(std::move(space), std::move(gens));
}

CondReal CondSequence::term(const CondNat& index) const {
  require_same_space(space_, index.space());
  std::vector<Rat> values(space_->atom_count());
  for (std::size_t a = 0; a < values.size(); ++a) {
    const Int& m = index.at(a);
    if (!m.fits_ulong_p())
      throw Error(ErrorCode::EvaluationError, "sequence index too large");
    values[a] = gens_[a](m.get_ui());
  }
  return CondReal(space_, std::move(values));
}

CondReal limsup(const CondSequence& seq, std::uint64_t horizon, std::uint64_t window,
                const Rat* bound) {
  if (window == 0 || window > horizon)
    throw Error(ErrorCode::ConfigError, "window must satisfy 0 < window <= horizon");
  std::size_t k = seq.space()->atom_count();
  std::vector<Rat> out(k);
  for (std::size_t a = 0; a < k; ++a) {
    bool first = true;
    for (std::uint64_t i = horizon - window; i < horizon; ++i) {
      Rat v = seq.at(a, i);
      if (bound && abs_rat(v) >= *bound)
        throw Error(ErrorCode::UnboundedOnHorizon,
                    "sequence exceeds bound at atom " + std::to_string(a) + ", index " +
                        std::to_string(i));
      if (first || out[a] < v) out[a] = v;
      first = false;
    }
  }
  return CondReal(seq.space(), std::move(out));
}

std::vector<CondNat> bw_subsequence(const CondSequence& seq, const CondReal& target,
                                    const std::vector<Rat>& eps, std::uint64_t horizon) {
  require_same_space(seq.space(), target.space());
  if (eps.empty()) throw Error(ErrorCode::EmptyList, "need at least one tolerance");
  for (const Rat& e : eps)
    if (e <= 0) throw Error(ErrorCode::ConfigError, "tolerances must be positive");

  std::size_t k = seq.space()->atom_count();
  std::vector<CondNat> out;
  std::vector<std::uint64_t> prev(k, 0);
  bool have_prev = false;
  for (std::size_t j = 0; j < eps.size(); ++j) {
    std::vector<Int> indices(k);
    for (std::size_t a = 0; a < k; ++a) {
      std::uint64_t start = have_prev ? prev[a] + 1 : 0;
      bool found = false;
      for (std::uint64_t i = start; i < horizon; ++i) {
        if (abs_rat(seq.at(a, i) - target.at(a)) <= eps[j]) {
          indices[a] = static_cast<unsigned long>(i);
          prev[a] = i;
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(ErrorCode::NoAdmissibleIndex,
                    "no admissible index at atom " + std::to_string(a) + " for step " +
                        std::to_string(j + 1));
    }
    have_prev = true;
    out.emplace_back(seq.space(), std::move(indices));
  }
  return out;
}

namespace {

void validate_field(const CompactField& field) {
  std::size_t k = field.space->atom_count();
  if (field.boxes.size() != k || field.delta.size() != k || field.dim.size() != k)
    throw Error(ErrorCode::LengthMismatch, "field needs one entry per atom");
  for (std::size_t a = 0; a < k; ++a) {
    if (field.delta[a] <= 0)
      throw Error(ErrorCode::ConfigError, "grid step must be positive");
    if (field.boxes[a].empty())
      throw Error(ErrorCode::EmptyList, "compact set must be nonempty at every atom");
    for (const Box& b : field.boxes[a]) {
      if (b.lo.size() != field.dim[a] || b.hi.size() != field.dim[a])
        throw Error(ErrorCode::LengthMismatch, "box dimension mismatch");
      for (std::size_t i = 0; i < b.lo.size(); ++i)
        if (b.hi[i] < b.lo[i])
          throw Error(ErrorCode::ConfigError, "box has hi < lo");
    }
  }
}

}  // namespace

std::vector<std::vector<Rat>> grid_points(const CompactField& field, std::size_t atom) {
  const Rat& delta = field.delta[atom];
  std::size_t n = field.dim[atom];
  std::vector<std::vector<Rat>> points;
  for (const Box& box : field.boxes[atom]) {
    // per-axis grids lo, lo+delta, ..., clamped into the box, always
    // including hi so the corner is never lost
    std::vector<std::vector<Rat>> axes(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Rat v = box.lo[i]; v < box.hi[i]; v += delta) {
        v.canonicalize();
        axes[i].push_back(v);
      }
      axes[i].push_back(box.hi[i]);
    }
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<Rat> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = axes[i][idx[i]];
      points.push_back(std::move(p));
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++idx[i] < axes[i].size()) break;
        idx[i] = 0;
        if (i == 0) goto box_done;
      }
      if (n == 0) break;
    }
  box_done:;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

ArgminResult argmin(const CompactField& field, const Integrand& f) {
  require_same_space(field.space, f.space);
  validate_field(field);
  std::size_t k = field.space->atom_count();
  if (f.exprs.size() != k)
    throw Error(ErrorCode::LengthMismatch, "integrand needs one expression per atom");

  RaggedVec point{field.space, std::vector<std::vector<Rat>>(k)};
  std::vector<Rat> values(k);
  for (std::size_t a = 0; a < k; ++a) {
    bool first = true;
    // lexicographic enumeration; keeping only strictly better values makes
    // the lexicographically smallest minimizer win ties
    for (auto& p : grid_points(field, a)) {
      ExprEnv env;
      env.coords = p;
      Rat v = eval_expr(f.exprs[a], env);
      if (first || v < values[a]) {
        values[a] = std::move(v);
        point.coords[a] = std::move(p);
      }
      first = false;
    }
  }
  return ArgminResult{std::move(point), CondReal(field.space, std::move(values))};
}

Event selections_contain(const CompactField& field, const RaggedVec& x) {
  require_same_space(field.space, x.space);
  validate_field(field);
  Event out = Event::none(field.space);
  for (std::size_t a = 0; a < field.space->atom_count(); ++a) {
    if (x.coords[a].size() != field.dim[a]) continue;
    for (const Box& box : field.boxes[a]) {
      bool inside = true;
      for (std::size_t i = 0; i < field.dim[a] && inside; ++i)
        inside = box.lo[i] <= x.coords[a][i] && x.coords[a][i] <= box.hi[i];
      if (inside) {
        out = out.with_atom(a, true);
        break;
      }
    }
  }
  return out;
}

}  // namespace condmodel
