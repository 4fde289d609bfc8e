#ifndef CONDMODEL_MEASURE_HPP
#define CONDMODEL_MEASURE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "condmodel/error.hpp"
#include "condmodel/rational.hpp"

namespace condmodel {

class MeasureSpace;
using SpacePtr = std::shared_ptr<const MeasureSpace>;

// A finite atomic measure algebra: k atoms with strictly positive rational
// weights. Events are atom subsets; the null ideal is trivial, so "almost
// everywhere" means "at every atom".
class MeasureSpace {
 public:
  static SpacePtr make(std::vector<Rat> weights);

  std::size_t atom_count() const { return weights_.size(); }
  const Rat& weight(std::size_t atom) const { return weights_[atom]; }
  const std::vector<Rat>& weights() const { return weights_; }
  Rat total() const;

 private:
  explicit MeasureSpace(std::vector<Rat> weights) : weights_(std::move(weights)) {}
  std::vector<Rat> weights_;
};

// An element of the Boolean algebra of events: a subset of atoms.
class Event {
 public:
  Event() = default;

  static Event none(SpacePtr space);
  static Event all(SpacePtr space);
  static Event of_atoms(SpacePtr space, const std::vector<std::size_t>& atoms);

  const SpacePtr& space() const { return space_; }
  std::size_t atom_count() const { return mask_.size(); }
  bool contains(std::size_t atom) const { return mask_[atom]; }

  bool is_empty() const;
  bool is_all() const;
  std::size_t cardinality() const;

  Event meet(const Event& other) const;
  Event join(const Event& other) const;
  Event complement() const;
  Event minus(const Event& other) const;
  Event sym_diff(const Event& other) const;
  bool subset_of(const Event& other) const;

  Rat measure() const;
  std::vector<std::size_t> atoms() const;

  bool operator==(const Event& other) const;
  bool operator!=(const Event& other) const { return !(*this == other); }

  Event with_atom(std::size_t atom, bool present) const;

 private:
  Event(SpacePtr space, std::vector<bool> mask)
      : space_(std::move(space)), mask_(std::move(mask)) {}

  SpacePtr space_;
  std::vector<bool> mask_;
};

struct Partition {
  std::vector<Event> pieces;
};

// Throws NotDisjoint / NotExhaustive; empty pieces are allowed.
Partition validate_partition(const std::vector<Event>& pieces);

void require_same_space(const SpacePtr& a, const SpacePtr& b);

// Exhaustively checks the Boolean-algebra laws over all events of the space
// (intended for small spaces, k <= 5). Returns the number of cases checked;
// throws on a failed law.
std::size_t check_boolean_laws(const SpacePtr& space);

std::string event_to_string(const Event& e);

}  // namespace condmodel

#endif
