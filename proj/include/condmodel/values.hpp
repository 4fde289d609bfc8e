#ifndef CONDMODEL_VALUES_HPP
#define CONDMODEL_VALUES_HPP

#include <vector>

#include "condmodel/measure.hpp"
#include "condmodel/rational.hpp"

namespace condmodel {

// An element of L0(N): one nonnegative integer per atom.
class CondNat {
 public:
  CondNat(SpacePtr space, std::vector<Int> values);
  static CondNat constant(SpacePtr space, const Int& value);

  const SpacePtr& space() const { return space_; }
  const Int& at(std::size_t atom) const { return values_[atom]; }
  const std::vector<Int>& values() const { return values_; }

  CondNat operator+(const CondNat& other) const;
  CondNat operator*(const CondNat& other) const;

  bool operator==(const CondNat& other) const;

 private:
  SpacePtr space_;
  std::vector<Int> values_;
};

// An element of L0(R), realized as per-atom exact rationals.
class CondReal {
 public:
  CondReal(SpacePtr space, std::vector<Rat> values);
  static CondReal constant(SpacePtr space, const Rat& value);

  const SpacePtr& space() const { return space_; }
  const Rat& at(std::size_t atom) const { return values_[atom]; }
  const std::vector<Rat>& values() const { return values_; }

  CondReal operator+(const CondReal& other) const;
  CondReal operator-(const CondReal& other) const;
  CondReal operator*(const CondReal& other) const;
  // Throws DivisionByZeroAtAtom naming the offending event.
  CondReal operator/(const CondReal& other) const;

  bool operator==(const CondReal& other) const;

 private:
  SpacePtr space_;
  std::vector<Rat> values_;
};

struct Comparison {
  Event lt, eq, gt;  // always a partition of the full event
};

Comparison compare(const CondNat& x, const CondNat& y);
Comparison compare(const CondReal& x, const CondReal& y);

// The unique gluing Sum_j xs[j]|pieces[j]; one value per atom, copied from
// the piece containing that atom.
CondNat concat_values(const std::vector<CondNat>& xs, const Partition& p);
CondReal concat_values(const std::vector<CondReal>& xs, const Partition& p);

}  // namespace condmodel

#endif
