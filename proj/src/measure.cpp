#include "condmodel/measure.hpp"

#include <algorithm>

namespace condmodel {

SpacePtr MeasureSpace::make(std::vector<Rat> weights) {
  if (weights.empty()) throw Error(ErrorCode::EmptySpace, "a measure space needs at least one atom");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0)
      throw Error(ErrorCode::NonpositiveWeight,
                  "weight of atom " + std::to_string(i) + " is not strictly positive");
  }
  return SpacePtr(new MeasureSpace(std::move(weights)));
}

Rat MeasureSpace::total() const {
  Rat sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a != b) throw Error(ErrorCode::SpaceMismatch, "operands belong to different measure spaces");
}

Event Event::none(SpacePtr space) {
  std::vector<bool> mask(space->atom_count(), false);
  return Event(std::move(space), std::move(mask));
}

Event Event::all(SpacePtr space) {
  std::vector<bool> mask(space->atom_count(), true);
  return Event(std::move(space), std::move(mask));
}

Event Event::of_atoms(SpacePtr space, const std::vector<std::size_t>& atoms) {
  std::vector<bool> mask(space->atom_count(), false);
  for (std::size_t a : atoms) {
    if (a >= mask.size())
      throw Error(ErrorCode::ConfigError, "atom index " + std::to_string(a) + " out of range");
    mask[a] = true;
  }
  return Event(std::move(space), std::move(mask));
}

bool Event::is_empty() const {
  return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool Event::is_all() const {
  return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

std::size_t Event::cardinality() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

Event Event::meet(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask_[i] && other.mask_[i];
  return Event(space_, std::move(mask));
}

Event Event::join(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask_[i] || other.mask_[i];
  return Event(space_, std::move(mask));
}

Event Event::complement() const {
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !mask_[i];
  return Event(space_, std::move(mask));
}

Event Event::minus(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask_[i] && !other.mask_[i];
  return Event(space_, std::move(mask));
}

Event Event::sym_diff(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask_[i] != other.mask_[i];
  return Event(space_, std::move(mask));
}

bool Event::subset_of(const Event& other) const {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

Rat Event::measure() const {
  Rat sum = 0;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) sum += space_->weight(i);
  return sum;
}

std::vector<std::size_t> Event::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

bool Event::operator==(const Event& other) const {
  return space_ == other.space_ && mask_ == other.mask_;
}

Event Event::with_atom(std::size_t atom, bool present) const {
  std::vector<bool> mask = mask_;
  mask[atom] = present;
  return Event(space_, std::move(mask));
}

Partition validate_partition(const std::vector<Event>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::NotExhaustive, "partition has no pieces");
  const SpacePtr& space = pieces.front().space();
  Event covered = Event::none(space);
  for (const Event& piece : pieces) {
    require_same_space(space, piece.space());
    if (!covered.meet(piece).is_empty())
      throw Error(ErrorCode::NotDisjoint, "partition pieces overlap");
    covered = covered.join(piece);
  }
  if (!covered.is_all())
    throw Error(ErrorCode::NotExhaustive, "partition pieces do not cover the space");
  return Partition{pieces};
}

std::string event_to_string(const Event& e) {
  std::string out = "{";
  bool first = true;
  for (std::size_t a : e.atoms()) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

std::size_t check_boolean_laws(const SpacePtr& space) {
  std::size_t k = space->atom_count();
  std::size_t n = std::size_t{1} << k;
  std::vector<Event> events;
  events.reserve(n);
  for (std::size_t bits = 0; bits < n; ++bits) {
    std::vector<std::size_t> atoms;
    for (std::size_t a = 0; a < k; ++a)
      if (bits & (std::size_t{1} << a)) atoms.push_back(a);
    events.push_back(Event::of_atoms(space, atoms));
  }

  auto fail = [](const char* law) {
    throw Error(ErrorCode::ConfigError, std::string("Boolean law failed: ") + law);
  };

  std::size_t cases = 0;
  for (const Event& x : events) {
    if (x.complement().complement() != x) fail("double complement");
    if (x.join(x.complement()) != Event::all(space)) fail("excluded middle");
    if (x.meet(x.complement()) != Event::none(space)) fail("noncontradiction");
    // finite additivity over the (x, x^c) partition
    if (x.measure() + x.complement().measure() != space->total()) fail("additivity");
    ++cases;
    for (const Event& y : events) {
      if (x.meet(y) != y.meet(x)) fail("meet commutativity");
      if (x.join(y) != y.join(x)) fail("join commutativity");
      if (x.meet(y).complement() != x.complement().join(y.complement())) fail("De Morgan meet");
      if (x.join(y).complement() != x.complement().meet(y.complement())) fail("De Morgan join");
      ++cases;
      for (const Event& z : events) {
        if (x.meet(y.meet(z)) != x.meet(y).meet(z)) fail("meet associativity");
        if (x.join(y.join(z)) != x.join(y).join(z)) fail("join associativity");
        if (x.meet(y.join(z)) != x.meet(y).join(x.meet(z))) fail("distributivity");
        ++cases;
      }
    }
  }
  return cases;
}

}  // namespace condmodel
