#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condmodel/condset.hpp"
#include "condmodel/rng.hpp"

using namespace condmodel;

namespace {

SpacePtr s2() { return MeasureSpace::make({Rat(1, 2), Rat(1, 2)}); }

CondNat nat(const SpacePtr& s, long a, long b) { return CondNat(s, {Int(a), Int(b)}); }

// N0 = ({1,2} at atom 0, {5} at atom 1), carrier Omega
CondSet n0(const SpacePtr& s) {
  return CondSet::make_stable(s, {Fiber::finite({1, 2}), Fiber::finite({5})}, Event::all(s));
}

// M0 = ({9} at atom 0, {5,6} at atom 1), carrier Omega
CondSet m0(const SpacePtr& s) {
  return CondSet::make_stable(s, {Fiber::finite({9}), Fiber::finite({5, 6})}, Event::all(s));
}

}  // namespace

TEST_CASE("fiber algebra") {
  Fiber f = Fiber::finite({2, 1, 2});
  CHECK(f.listed() == std::vector<std::uint64_t>{1, 2});
  CHECK(f.contains(1));
  CHECK(!f.contains(3));

  Fiber cof = Fiber::cofinite({0, 4});
  CHECK(cof.contains(3));
  CHECK(!cof.contains(4));
  CHECK(cof.complement() == Fiber::finite({0, 4}));
  CHECK(f.complement().complement() == f);

  CHECK(f.intersect(cof) == Fiber::finite({1, 2}));
  CHECK(Fiber::finite({1, 2}).unite(Fiber::cofinite({1, 3})) == Fiber::cofinite({3}));
  CHECK(Fiber::cofinite({1, 3}).intersect(Fiber::cofinite({2})) == Fiber::cofinite({1, 2, 3}));
  CHECK(f.subset_of(cof.unite(f)));
  CHECK(!cof.subset_of(f));
  CHECK(Fiber::empty().subset_of(f));
  CHECK(f.subset_of(Fiber::full()));
}

TEST_CASE("make_stable canonicalizes and validates") {
  auto s = s2();
  CondSet n = n0(s);
  CHECK(n.carrier().is_all());
  CHECK(n.fiber(0) == Fiber::finite({1, 2}));

  // carrier empty is bottom, whatever the fibers say
  CondSet bot = CondSet::make_stable(s, {Fiber::finite({3}), Fiber::finite({4})},
                                     Event::none(s));
  CHECK(bot.is_bottom());
  CHECK(bot == CondSet::bottom(s));

  // off-carrier fibers are normalized away
  Event a = Event::of_atoms(s, {0});
  CondSet left = CondSet::make_stable(s, {Fiber::finite({1}), Fiber::finite({7})}, a);
  CondSet also = CondSet::make_stable(s, {Fiber::finite({1}), Fiber::finite({8})}, a);
  CHECK(left == also);

  try {
    CondSet::make_stable(s, {Fiber::empty(), Fiber::finite({5})}, Event::all(s));
    FAIL("expected EmptyFiber");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyFiber);
  }
}

TEST_CASE("restriction") {
  auto s = s2();
  Event a = Event::of_atoms(s, {0});
  CondSet r = restrict_set(n0(s), a);
  CHECK(r.carrier() == a);
  CHECK(r.fiber(0) == Fiber::finite({1, 2}));
  CHECK(restrict_set(n0(s), Event::all(s)) == n0(s));
  CHECK(restrict_set(n0(s), Event::none(s)).is_bottom());
}

TEST_CASE("concatenation of sets") {
  auto s = s2();
  Event a = Event::of_atoms(s, {0});
  Event b = Event::of_atoms(s, {1});

  CondSet glued = concat_sets({n0(s), m0(s)}, validate_partition({a, b}));
  CHECK(glued == CondSet::make_stable(s, {Fiber::finite({1, 2}), Fiber::finite({5, 6})},
                                      Event::all(s)));

  // pieces may fall outside the operand's carrier: the glued carrier shrinks
  CondSet partial = concat_sets({restrict_set(n0(s), a), m0(s)}, validate_partition({b, a}));
  CHECK(partial.carrier() == a);
  CHECK(partial.fiber(0) == Fiber::finite({9}));

  CHECK(concat_sets({n0(s)}, validate_partition({Event::all(s)})) == n0(s));

  try {
    concat_sets({n0(s)}, validate_partition({a, b}));
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("conditional element relation") {
  auto s = s2();
  CHECK(member(nat(s, 2, 7), n0(s)) == Event::of_atoms(s, {0}));
  CHECK(member(nat(s, 1, 5), n0(s)).is_all());
  CHECK(member(nat(s, 0, 0), n0(s)).is_empty());
  CHECK(member(nat(s, 1, 5), restrict_set(n0(s), Event::of_atoms(s, {1}))) ==
        Event::of_atoms(s, {1}));
}

TEST_CASE("conditional intersection") {
  auto s = s2();
  CondSet meet = cond_intersect(n0(s), m0(s));
  CHECK(meet.carrier() == Event::of_atoms(s, {1}));
  CHECK(meet.fiber(1) == Fiber::finite({5}));

  CHECK(cond_intersect(n0(s), n0(s)) == n0(s));
  CHECK(cond_intersect(n0(s), CondSet::bottom(s)).is_bottom());
}

TEST_CASE("conditional complement") {
  auto s = s2();
  CondSet comp = cond_complement(n0(s));
  CHECK(comp.carrier().is_all());
  CHECK(comp.fiber(0) == Fiber::cofinite({1, 2}));
  CHECK(comp.fiber(1) == Fiber::cofinite({5}));

  CHECK(cond_complement(CondSet::full(s, Event::all(s))).is_bottom());
  CHECK(cond_complement(CondSet::bottom(s)) == CondSet::full(s, Event::all(s)));
}

TEST_CASE("sequential union and intersection") {
  auto s = s2();
  Event a = Event::of_atoms(s, {0});
  Event b = Event::of_atoms(s, {1});

  CHECK(seq_intersect({n0(s), m0(s)}) == cond_intersect(n0(s), m0(s)));

  CondSet join = seq_union({restrict_set(n0(s), a), restrict_set(m0(s), b)});
  CHECK(join == CondSet::make_stable(s, {Fiber::finite({1, 2}), Fiber::finite({5, 6})},
                                     Event::all(s)));
  CHECK(seq_union({n0(s)}) == n0(s));

  try {
    seq_union({});
    FAIL("expected EmptyList");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyList);
  }
}

TEST_CASE("inclusion") {
  auto s = s2();
  Event a = Event::of_atoms(s, {0});
  CHECK(includes(restrict_set(n0(s), a), n0(s)));
  CHECK(!includes(n0(s), restrict_set(n0(s), a)));
  CHECK(includes(CondSet::bottom(s), n0(s)));
  CHECK(!includes(n0(s), m0(s)));
}

TEST_CASE("pairing encode and decode") {
  CHECK(pair_encode(0, 1) == 1);
  CHECK(pair_encode(1, 0) == 2);
  CHECK(pair_encode(3, 5) == 67);
  CHECK(pair_decode(pair_encode(3, 5)) == std::pair<std::uint64_t, std::uint64_t>(3, 5));
  for (std::uint64_t i = 0; i < 40; ++i)
    for (std::uint64_t j = 0; j < 40; ++j)
      CHECK(pair_decode(pair_encode(i, j)) == std::pair<std::uint64_t, std::uint64_t>(i, j));
}

TEST_CASE("product of sets") {
  auto s = s2();
  CondSet n = CondSet::make_stable(s, {Fiber::finite({0}), Fiber::finite({1})}, Event::all(s));
  CondSet m = CondSet::make_stable(s, {Fiber::finite({1}), Fiber::finite({0})}, Event::all(s));
  CondSet prod = product(n, m);
  CHECK(prod.fiber(0) == Fiber::finite({1}));
  CHECK(prod.fiber(1) == Fiber::finite({2}));

  CHECK(product(n0(s), CondSet::bottom(s)).is_bottom());

  try {
    product(cond_complement(n0(s)), m0(s));
    FAIL("expected UnboundedFiber");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundedFiber);
  }
}

TEST_CASE("finiteness") {
  auto s = s2();
  CHECK(is_finite_set(n0(s)));
  CHECK(!is_finite_set(cond_complement(n0(s))));
  CHECK(is_finite_set(CondSet::bottom(s)));
}

TEST_CASE("gluing identity for membership") {
  auto s = MeasureSpace::make({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Event a = Event::of_atoms(s, {0, 2});
    Event b = Event::of_atoms(s, {1});
    Partition p = validate_partition({a, b});

    auto draw_nat = [&] {
      std::vector<Int> v(3);
      for (auto& x : v) x = rng.below(6);
      return CondNat(s, v);
    };
    auto draw_set = [&] {
      Event carrier = Event::none(s);
      std::vector<Fiber> fibers(3, Fiber::empty());
      for (std::size_t atom = 0; atom < 3; ++atom) {
        if (rng.below(4) == 0) continue;
        std::vector<std::uint64_t> elems;
        for (std::uint64_t v = 0; v < 6; ++v)
          if (rng.coin()) elems.push_back(v);
        if (elems.empty()) elems.push_back(0);
        fibers[atom] = Fiber::finite(std::move(elems));
        carrier = carrier.with_atom(atom, true);
      }
      return CondSet::make_stable(s, fibers, carrier);
    };

    std::vector<CondNat> ns = {draw_nat(), draw_nat()};
    CondSet set = draw_set();
    Event glued = member(concat_values(ns, p), set);
    Event expected = member(ns[0], set).meet(a).join(member(ns[1], set).meet(b));
    CHECK(glued == expected);
  }
}

TEST_CASE("double complement is the identity") {
  auto s = s2();
  Rng rng(23);
  CHECK(cond_complement(cond_complement(n0(s))) == n0(s));
  CHECK(cond_complement(cond_complement(CondSet::bottom(s))).is_bottom());
  for (int trial = 0; trial < 300; ++trial) {
    Event carrier = Event::none(s);
    std::vector<Fiber> fibers(2, Fiber::empty());
    for (std::size_t atom = 0; atom < 2; ++atom) {
      std::uint64_t mask = rng.below(16);
      bool cof = rng.below(3) == 0;
      std::vector<std::uint64_t> elems;
      for (std::uint64_t v = 0; v < 4; ++v)
        if ((mask >> v) & 1u) elems.push_back(v);
      if (!cof && elems.empty()) continue;
      fibers[atom] = cof ? Fiber::cofinite(std::move(elems)) : Fiber::finite(std::move(elems));
      carrier = carrier.with_atom(atom, true);
    }
    CondSet n = CondSet::make_stable(s, fibers, carrier);
    CHECK(cond_complement(cond_complement(n)) == n);
  }
}

TEST_CASE("stability closure under concatenation of restrictions") {
  auto s = MeasureSpace::make({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CondSet n = CondSet::make_stable(
      s, {Fiber::finite({1}), Fiber::cofinite({0}), Fiber::finite({2, 3})}, Event::all(s));
  Partition p = validate_partition(
      {Event::of_atoms(s, {1}), Event::of_atoms(s, {0, 2}), Event::none(s)});
  std::vector<CondSet> pieces;
  for (const Event& piece : p.pieces) pieces.push_back(restrict_set(n, piece));
  CHECK(concat_sets(pieces, p) == n);
}
