#include "condmodel/condset.hpp"

#include <algorithm>
#include <cmath>

namespace condmodel {

namespace {

std::vector<std::uint64_t> normalize(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint64_t> sorted_intersection(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> sorted_union(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> sorted_difference(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sorted_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Fiber membership for an arbitrary-precision value.
bool fiber_contains_int(const Fiber& f, const Int& v) {
  if (!v.fits_ulong_p()) {
    // beyond the listed range: cofinite sets contain it, finite ones do not
    return f.is_cofinite();
  }
  return f.contains(v.get_ui());
}

}  // namespace

Fiber Fiber::finite(std::vector<std::uint64_t> elems) {
  return Fiber(false, normalize(std::move(elems)));
}

Fiber Fiber::cofinite(std::vector<std::uint64_t> excluded) {
  return Fiber(true, normalize(std::move(excluded)));
}

bool Fiber::contains(std::uint64_t v) const {
  bool listed = std::binary_search(elems_.begin(), elems_.end(), v);
  return cofinite_ ? !listed : listed;
}

Fiber Fiber::intersect(const Fiber& other) const {
  if (!cofinite_ && !other.cofinite_) return Fiber(false, sorted_intersection(elems_, other.elems_));
  if (!cofinite_ && other.cofinite_) return Fiber(false, sorted_difference(elems_, other.elems_));
  if (cofinite_ && !other.cofinite_) return Fiber(false, sorted_difference(other.elems_, elems_));
  return Fiber(true, sorted_union(elems_, other.elems_));
}

Fiber Fiber::unite(const Fiber& other) const {
  if (!cofinite_ && !other.cofinite_) return Fiber(false, sorted_union(elems_, other.elems_));
  if (!cofinite_ && other.cofinite_) return Fiber(true, sorted_difference(other.elems_, elems_));
  if (cofinite_ && !other.cofinite_) return Fiber(true, sorted_difference(elems_, other.elems_));
  return Fiber(true, sorted_intersection(elems_, other.elems_));
}

Fiber Fiber::complement() const { return Fiber(!cofinite_, elems_); }

bool Fiber::subset_of(const Fiber& other) const {
  if (!cofinite_ && !other.cofinite_) return sorted_subset(elems_, other.elems_);
  if (!cofinite_ && other.cofinite_) return sorted_intersection(elems_, other.elems_).empty();
  if (cofinite_ && !other.cofinite_) return false;
  return sorted_subset(other.elems_, elems_);
}

bool Fiber::operator==(const Fiber& other) const {
  return cofinite_ == other.cofinite_ && elems_ == other.elems_;
}

CondSet CondSet::make_stable(SpacePtr space, const std::vector<Fiber>& per_atom,
                             const Event& carrier) {
  require_same_space(space, carrier.space());
  if (per_atom.size() != space->atom_count())
    throw Error(ErrorCode::LengthMismatch, "one fiber per atom expected");
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (!carrier.contains(a)) continue;
    if (per_atom[a].is_empty())
      throw Error(ErrorCode::EmptyFiber, "empty fiber at carrier atom " + std::to_string(a));
    fibers[a] = per_atom[a];
  }
  return CondSet(std::move(space), carrier, std::move(fibers));
}

CondSet CondSet::bottom(SpacePtr space) {
  Event none = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  return CondSet(std::move(space), std::move(none), std::move(fibers));
}

CondSet CondSet::full(SpacePtr space, const Event& carrier) {
  std::vector<Fiber> fibers(space->atom_count(), Fiber::full());
  return make_stable(std::move(space), fibers, carrier);
}

bool CondSet::operator==(const CondSet& other) const {
  return space_ == other.space_ && carrier_ == other.carrier_ && fibers_ == other.fibers_;
}

CondSet restrict_set(const CondSet& n, const Event& a) {
  Event carrier = n.carrier().meet(a);
  std::vector<Fiber> fibers(n.space()->atom_count(), Fiber::empty());
  for (std::size_t i = 0; i < fibers.size(); ++i)
    if (carrier.contains(i)) fibers[i] = n.fiber(i);
  return CondSet::make_stable(n.space(), fibers, carrier);
}

CondSet concat_sets(const std::vector<CondSet>& ns, const Partition& p) {
  if (ns.size() != p.pieces.size())
    throw Error(ErrorCode::LengthMismatch, "set list and partition have different lengths");
  if (ns.empty()) throw Error(ErrorCode::EmptyList, "nothing to concatenate");
  const SpacePtr& space = ns.front().space();
  for (const CondSet& n : ns) require_same_space(space, n.space());

  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t j = 0; j < ns.size(); ++j) {
    Event part = p.pieces[j].meet(ns[j].carrier());
    for (std::size_t a = 0; a < fibers.size(); ++a) {
      if (part.contains(a)) {
        fibers[a] = ns[j].fiber(a);
        carrier = carrier.with_atom(a, true);
      }
    }
  }
  return CondSet::make_stable(space, fibers, carrier);
}

Event member(const CondNat& n, const CondSet& set) {
  require_same_space(n.space(), set.space());
  Event out = Event::none(n.space());
  for (std::size_t a = 0; a < n.space()->atom_count(); ++a)
    if (set.carrier().contains(a) && fiber_contains_int(set.fiber(a), n.at(a)))
      out = out.with_atom(a, true);
  return out;
}

CondSet cond_intersect(const CondSet& n, const CondSet& m) {
  require_same_space(n.space(), m.space());
  const SpacePtr& space = n.space();
  Event both = n.carrier().meet(m.carrier());
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (!both.contains(a)) continue;
    Fiber f = n.fiber(a).intersect(m.fiber(a));
    if (!f.is_empty()) {
      fibers[a] = std::move(f);
      carrier = carrier.with_atom(a, true);
    }
  }
  return CondSet::make_stable(space, fibers, carrier);
}

CondSet cond_complement(const CondSet& n) {
  const SpacePtr& space = n.space();
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (n.carrier().contains(a)) {
      if (!n.fiber(a).is_full()) {
        fibers[a] = n.fiber(a).complement();
        carrier = carrier.with_atom(a, true);
      }
    } else {
      fibers[a] = Fiber::full();
      carrier = carrier.with_atom(a, true);
    }
  }
  return CondSet::make_stable(space, fibers, carrier);
}

CondSet seq_intersect(const std::vector<CondSet>& ns) {
  if (ns.empty()) throw Error(ErrorCode::EmptyList, "seq_intersect of nothing");
  const SpacePtr& space = ns.front().space();
  for (const CondSet& n : ns) require_same_space(space, n.space());
  Event common = Event::all(space);
  for (const CondSet& n : ns) common = common.meet(n.carrier());
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (!common.contains(a)) continue;
    Fiber f = ns.front().fiber(a);
    for (std::size_t j = 1; j < ns.size(); ++j) f = f.intersect(ns[j].fiber(a));
    if (!f.is_empty()) {
      fibers[a] = std::move(f);
      carrier = carrier.with_atom(a, true);
    }
  }
  return CondSet::make_stable(space, fibers, carrier);
}

CondSet seq_union(const std::vector<CondSet>& ns) {
  if (ns.empty()) throw Error(ErrorCode::EmptyList, "seq_union of nothing");
  const SpacePtr& space = ns.front().space();
  for (const CondSet& n : ns) require_same_space(space, n.space());
  Event carrier = Event::none(space);
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    Fiber f = Fiber::empty();
    bool any = false;
    for (const CondSet& n : ns) {
      if (n.carrier().contains(a)) {
        f = any ? f.unite(n.fiber(a)) : n.fiber(a);
        any = true;
      }
    }
    if (any) {
      fibers[a] = std::move(f);
      carrier = carrier.with_atom(a, true);
    }
  }
  return CondSet::make_stable(space, fibers, carrier);
}

bool includes(const CondSet& n, const CondSet& m) {
  require_same_space(n.space(), m.space());
  if (!n.carrier().subset_of(m.carrier())) return false;
  for (std::size_t a = 0; a < n.space()->atom_count(); ++a)
    if (n.carrier().contains(a) && !n.fiber(a).subset_of(m.fiber(a))) return false;
  return true;
}

std::uint64_t pair_encode(std::uint64_t i, std::uint64_t j) {
  std::uint64_t s = i + j;
  return s * s + i;
}

std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t code) {
  std::uint64_t s = 0;
  // integer sqrt by expanding from a float estimate
  s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(code)));
  while (s > 0 && s * s > code) --s;
  while ((s + 1) * (s + 1) <= code) ++s;
  std::uint64_t i = code - s * s;
  return {i, s - i};
}

CondSet product(const CondSet& n, const CondSet& m) {
  require_same_space(n.space(), m.space());
  const SpacePtr& space = n.space();
  Event carrier = n.carrier().meet(m.carrier());
  std::vector<Fiber> fibers(space->atom_count(), Fiber::empty());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (!carrier.contains(a)) continue;
    if (n.fiber(a).is_cofinite() || m.fiber(a).is_cofinite())
      throw Error(ErrorCode::UnboundedFiber,
                  "product of a cofinite fiber is not finite-or-cofinite (atom " +
                      std::to_string(a) + ")");
    std::vector<std::uint64_t> codes;
    for (std::uint64_t i : n.fiber(a).listed())
      for (std::uint64_t j : m.fiber(a).listed()) codes.push_back(pair_encode(i, j));
    fibers[a] = Fiber::finite(std::move(codes));
  }
  return CondSet::make_stable(space, fibers, carrier);
}

bool is_finite_set(const CondSet& n) {
  for (std::size_t a = 0; a < n.space()->atom_count(); ++a)
    if (n.carrier().contains(a) && n.fiber(a).is_cofinite()) return false;
  return true;
}

std::string condset_to_string(const CondSet& n) {
  if (n.is_bottom()) return "{*}";
  std::string out = "carrier " + event_to_string(n.carrier());
  for (std::size_t a : n.carrier().atoms()) {
    out += "; @" + std::to_string(a) + (n.fiber(a).is_cofinite() ? " N\\{" : " {");
    bool first = true;
    for (std::uint64_t v : n.fiber(a).listed()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += "}";
  }
  return out;
}

}  // namespace condmodel
