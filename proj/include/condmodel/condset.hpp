#ifndef CONDMODEL_CONDSET_HPP
#define CONDMODEL_CONDSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "condmodel/measure.hpp"
#include "condmodel/values.hpp"

namespace condmodel {

// A finite-or-cofinite subset of N. Cofinite sets store the finite
// complement, which keeps the class closed under intersection, union and
// complement and makes equality structural.
class Fiber {
 public:
  Fiber() : cofinite_(false) {}

  static Fiber finite(std::vector<std::uint64_t> elems);
  static Fiber cofinite(std::vector<std::uint64_t> excluded);
  static Fiber full() { return cofinite({}); }
  static Fiber empty() { return finite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && elems_.empty(); }
  bool is_full() const { return cofinite_ && elems_.empty(); }
  // Listed elements: the members if finite, the excluded values if cofinite.
  const std::vector<std::uint64_t>& listed() const { return elems_; }

  bool contains(std::uint64_t v) const;

  Fiber intersect(const Fiber& other) const;
  Fiber unite(const Fiber& other) const;
  Fiber complement() const;
  bool subset_of(const Fiber& other) const;

  bool operator==(const Fiber& other) const;
  bool operator!=(const Fiber& other) const { return !(*this == other); }

 private:
  Fiber(bool cofinite, std::vector<std::uint64_t> elems)
      : cofinite_(cofinite), elems_(std::move(elems)) {}

  bool cofinite_;
  std::vector<std::uint64_t> elems_;  // sorted, unique
};

// An element of the conditional power set of L0(N): a carrier event plus a
// nonempty fiber per carrier atom. Off-carrier atoms hold the canonical
// empty placeholder so that equality is structural. Carrier empty is the
// bottom object {*}.
class CondSet {
 public:
  // Throws EmptyFiber if a carrier atom's set is empty.
  static CondSet make_stable(SpacePtr space, const std::vector<Fiber>& per_atom,
                             const Event& carrier);
  static CondSet bottom(SpacePtr space);
  // The full set L0(N)|carrier.
  static CondSet full(SpacePtr space, const Event& carrier);

  const SpacePtr& space() const { return space_; }
  const Event& carrier() const { return carrier_; }
  const Fiber& fiber(std::size_t atom) const { return fibers_[atom]; }
  bool is_bottom() const { return carrier_.is_empty(); }

  bool operator==(const CondSet& other) const;
  bool operator!=(const CondSet& other) const { return !(*this == other); }

 private:
  CondSet(SpacePtr space, Event carrier, std::vector<Fiber> fibers)
      : space_(std::move(space)), carrier_(std::move(carrier)), fibers_(std::move(fibers)) {}

  SpacePtr space_;
  Event carrier_;
  std::vector<Fiber> fibers_;
};

CondSet restrict_set(const CondSet& n, const Event& a);
CondSet concat_sets(const std::vector<CondSet>& ns, const Partition& p);

// The conditional element relation: the largest subevent of the carrier on
// which n restricts into N.
Event member(const CondNat& n, const CondSet& set);

CondSet cond_intersect(const CondSet& n, const CondSet& m);
CondSet cond_complement(const CondSet& n);
CondSet seq_intersect(const std::vector<CondSet>& ns);
CondSet seq_union(const std::vector<CondSet>& ns);
bool includes(const CondSet& n, const CondSet& m);  // n included in m

// Cantor-style pairing (i,j) -> (i+j)^2 + i.
std::uint64_t pair_encode(std::uint64_t i, std::uint64_t j);
std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t code);

// Product via the pairing function; rejects cofinite fibers, whose encoded
// image is not finite-or-cofinite.
CondSet product(const CondSet& n, const CondSet& m);

// True iff every fiber is a finite set.
bool is_finite_set(const CondSet& n);

std::string condset_to_string(const CondSet& n);

}  // namespace condmodel

#endif
