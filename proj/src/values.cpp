#include "condmodel/values.hpp"

namespace condmodel {

namespace {

void require_length(std::size_t got, std::size_t want) {
  if (got != want)
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(want) + " per-atom values, got " + std::to_string(got));
}

}  // namespace

CondNat::CondNat(SpacePtr space, std::vector<Int> values)
    : space_(std::move(space)), values_(std::move(values)) {
  require_length(values_.size(), space_->atom_count());
  for (const Int& v : values_)
    if (v < 0) throw Error(ErrorCode::ConfigError, "CondNat entries must be nonnegative");
}

CondNat CondNat::constant(SpacePtr space, const Int& value) {
  std::vector<Int> vals(space->atom_count(), value);
  return CondNat(std::move(space), std::move(vals));
}

CondNat CondNat::operator+(const CondNat& other) const {
  require_same_space(space_, other.space_);
  std::vector<Int> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] + other.values_[i];
  return CondNat(space_, std::move(out));
}

CondNat CondNat::operator*(const CondNat& other) const {
  require_same_space(space_, other.space_);
  std::vector<Int> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return CondNat(space_, std::move(out));
}

bool CondNat::operator==(const CondNat& other) const {
  return space_ == other.space_ && values_ == other.values_;
}

CondReal::CondReal(SpacePtr space, std::vector<Rat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  require_length(values_.size(), space_->atom_count());
}

CondReal CondReal::constant(SpacePtr space, const Rat& value) {
  std::vector<Rat> vals(space->atom_count(), value);
  return CondReal(std::move(space), std::move(vals));
}

CondReal CondReal::operator+(const CondReal& other) const {
  require_same_space(space_, other.space_);
  std::vector<Rat> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] + other.values_[i];
  return CondReal(space_, std::move(out));
}

CondReal CondReal::operator-(const CondReal& other) const {
  require_same_space(space_, other.space_);
  std::vector<Rat> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] - other.values_[i];
  return CondReal(space_, std::move(out));
}

CondReal CondReal::operator*(const CondReal& other) const {
  require_same_space(space_, other.space_);
  std::vector<Rat> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return CondReal(space_, std::move(out));
}

CondReal CondReal::operator/(const CondReal& other) const {
  require_same_space(space_, other.space_);
  Event zero = Event::none(space_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (other.values_[i] == 0) zero = zero.with_atom(i, true);
  if (!zero.is_empty())
    throw Error(ErrorCode::DivisionByZeroAtAtom, "divisor vanishes on " + event_to_string(zero));
  std::vector<Rat> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] / other.values_[i];
  return CondReal(space_, std::move(out));
}

bool CondReal::operator==(const CondReal& other) const {
  return space_ == other.space_ && values_ == other.values_;
}

namespace {

template <typename T>
Comparison compare_impl(const T& x, const T& y) {
  require_same_space(x.space(), y.space());
  const SpacePtr& space = x.space();
  Event lt = Event::none(space), eq = Event::none(space), gt = Event::none(space);
  for (std::size_t i = 0; i < space->atom_count(); ++i) {
    if (x.at(i) < y.at(i)) lt = lt.with_atom(i, true);
    else if (x.at(i) == y.at(i)) eq = eq.with_atom(i, true);
    else gt = gt.with_atom(i, true);
  }
  return Comparison{lt, eq, gt};
}

template <typename T>
T concat_impl(const std::vector<T>& xs, const Partition& p) {
  if (xs.size() != p.pieces.size())
    throw Error(ErrorCode::LengthMismatch, "value list and partition have different lengths");
  if (xs.empty()) throw Error(ErrorCode::EmptyList, "nothing to concatenate");
  const SpacePtr& space = xs.front().space();
  for (const T& x : xs) require_same_space(space, x.space());
  for (const Event& piece : p.pieces) require_same_space(space, piece.space());

  auto values = xs.front().values();
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t a = 0; a < space->atom_count(); ++a)
      if (p.pieces[j].contains(a)) values[a] = xs[j].at(a);
  return T(space, std::move(values));
}

}  // namespace

Comparison compare(const CondNat& x, const CondNat& y) { return compare_impl(x, y); }
Comparison compare(const CondReal& x, const CondReal& y) { return compare_impl(x, y); }

CondNat concat_values(const std::vector<CondNat>& xs, const Partition& p) {
  return concat_impl(xs, p);
}
CondReal concat_values(const std::vector<CondReal>& xs, const Partition& p) {
  return concat_impl(xs, p);
}

}  // namespace condmodel
