#ifndef CONDMODEL_ANALYSIS_HPP
#define CONDMODEL_ANALYSIS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "condmodel/expr.hpp"
#include "condmodel/measure.hpp"
#include "condmodel/values.hpp"

namespace condmodel {

// A vector in conditional Euclidean space with measurable dimension: the
// coordinate list at atom a has length n_a.
struct RaggedVec {
  SpacePtr space;
  std::vector<std::vector<Rat>> coords;  // one list per atom

  std::size_t dim(std::size_t atom) const { return coords[atom].size(); }
};

// Rational enclosure of a nonnegative real, one interval per atom.
struct NormEnclosure {
  CondReal lower;
  CondReal upper;
  bool exact(std::size_t atom) const { return lower.at(atom) == upper.at(atom); }
};

// Per-atom Euclidean norm sqrt(x1^2+...+x_na^2) as a rational enclosure of
// width <= tol; exact when the squared sum is a perfect rational square.
NormEnclosure euclid_norm(const RaggedVec& x, const Rat& tol);

// A conditional sequence of reals: per atom, a pure generator index -> value.
class CondSequence {
 public:
  using Generator = std::function<Rat(std::uint64_t)>;

  CondSequence(SpacePtr space, std::vector<Generator> gens);

  // Per-atom generators from expression strings in one free variable k.
  static CondSequence from_expressions(SpacePtr space, const std::vector<std::string>& exprs);

  const SpacePtr& space() const { return space_; }
  Rat at(std::size_t atom, std::uint64_t index) const { return gens_[atom](index); }
  // Term at a conditional index: value at atom a is the sequence at index m_a.
  CondReal term(const CondNat& index) const;

 private:
  SpacePtr space_;
  std::vector<Generator> gens_;
};

// Horizon estimate of limsup: per atom, the max over indices in
// [horizon - window, horizon). If bound is given, throws UnboundedOnHorizon
// at any atom where some |x_k| >= bound on the horizon.
CondReal limsup(const CondSequence& seq, std::uint64_t horizon, std::uint64_t window,
                const Rat* bound = nullptr);

// Bolzano-Weierstrass extraction: strictly increasing conditional indices
// n_1 < n_2 < ... with |x_{n_j} - target| <= eps[j] at every atom; minimal
// admissible index each step. Throws NoAdmissibleIndex when the horizon is
// exhausted at some atom.
std::vector<CondNat> bw_subsequence(const CondSequence& seq, const CondReal& target,
                                    const std::vector<Rat>& eps, std::uint64_t horizon);

// Closed box with rational corners.
struct Box {
  std::vector<Rat> lo, hi;  // lo[i] <= hi[i]
};

// Per-atom compact set: a finite union of boxes plus a grid step, standing
// in for an Effros measurable compact-valued map.
struct CompactField {
  SpacePtr space;
  std::vector<std::vector<Box>> boxes;  // per atom
  std::vector<Rat> delta;               // per atom, > 0
  std::vector<std::size_t> dim;         // per atom
};

// Per-atom cost expression over coordinates x1..xn.
struct Integrand {
  SpacePtr space;
  std::vector<ExprPtr> exprs;  // per atom
};

struct ArgminResult {
  RaggedVec point;
  CondReal value;
};

// Grid-exact per-atom minimization; lexicographically smallest minimizer on
// ties. The returned point is a per-atom (measurable) selection by
// construction. Throws EvaluationError on division by zero at a grid point.
ArgminResult argmin(const CompactField& field, const Integrand& f);

// All grid points of the atom's boxes, sorted lexicographically, deduplicated.
std::vector<std::vector<Rat>> grid_points(const CompactField& field, std::size_t atom);

// Event {atoms a : x's coordinates at a lie in the field's set at a}.
Event selections_contain(const CompactField& field, const RaggedVec& x);

}  // namespace condmodel

#endif
