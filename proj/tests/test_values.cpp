#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condmodel/rational.hpp"
#include "condmodel/rng.hpp"
#include "condmodel/values.hpp"

using namespace condmodel;

namespace {

SpacePtr s2() { return MeasureSpace::make({Rat(1, 2), Rat(1, 2)}); }

CondNat nat(const SpacePtr& s, long a, long b) { return CondNat(s, {Int(a), Int(b)}); }
CondReal real(const SpacePtr& s, Rat a, Rat b) { return CondReal(s, {a, b}); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/7") == Rat(-2, 7));
  CHECK(parse_rational("0.25") == Rat(1, 4));
  CHECK(parse_rational("-1.5") == Rat(-3, 2));
  CHECK(rational_to_string(Rat(4, 2)) == "2");
  CHECK(rational_to_string(Rat(-2, 7)) == "-2/7");
  CHECK_THROWS_AS(parse_rational("2/0"), const Error&);
  CHECK_THROWS_AS(parse_rational("abc"), const Error&);
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  CHECK(isqrt(Int(17)) == 4);
  Rat root;
  CHECK(rational_sqrt_exact(Rat(9, 4), &root));
  CHECK(root == Rat(3, 2));
  CHECK(!rational_sqrt_exact(Rat(2), &root));
}

TEST_CASE("pointwise arithmetic") {
  auto s = s2();
  CHECK(nat(s, 1, 2) + nat(s, 3, 4) == nat(s, 4, 6));
  CHECK(nat(s, 1, 2) * nat(s, 0, 1) == nat(s, 0, 2));
  CHECK(real(s, Rat(1, 2), Rat(3)) - real(s, Rat(1), Rat(1)) == real(s, Rat(-1, 2), Rat(2)));
  CHECK(real(s, Rat(1), Rat(1)) / real(s, Rat(2), Rat(4)) == real(s, Rat(1, 2), Rat(1, 4)));
}

TEST_CASE("division by zero names the offending event") {
  auto s = s2();
  try {
    real(s, Rat(1), Rat(1)) / real(s, Rat(0), Rat(2));
    FAIL("expected DivisionByZeroAtAtom");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZeroAtAtom);
    CHECK(std::string(e.what()).find("{0}") != std::string::npos);
  }
}

TEST_CASE("compare returns a partition") {
  auto s = s2();
  Comparison c = compare(nat(s, 1, 3), nat(s, 2, 3));
  CHECK(c.lt == Event::of_atoms(s, {0}));
  CHECK(c.eq == Event::of_atoms(s, {1}));
  CHECK(c.gt.is_empty());

  CondNat x = nat(s, 7, 0);
  Comparison refl = compare(x, x);
  CHECK(refl.eq.is_all());

  Comparison mixed = compare(nat(s, 5, 0), nat(s, 4, 1));
  CHECK(mixed.lt == Event::of_atoms(s, {1}));
  CHECK(mixed.gt == Event::of_atoms(s, {0}));

  CHECK_NOTHROW(validate_partition({mixed.lt, mixed.eq, mixed.gt}));
}

TEST_CASE("concatenation glues values along a partition") {
  auto s = s2();
  Event a = Event::of_atoms(s, {0});
  Event b = Event::of_atoms(s, {1});

  Partition p = validate_partition({a, b});
  CHECK(concat_values({nat(s, 2, 2), nat(s, 7, 7)}, p) == nat(s, 2, 7));
  CHECK(concat_values({nat(s, 5, 6)}, validate_partition({Event::all(s)})) == nat(s, 5, 6));
  Partition q = validate_partition({b, a});
  CHECK(concat_values({nat(s, 1, 9), nat(s, 9, 3)}, q) == nat(s, 9, 9));

  try {
    concat_values({nat(s, 1, 1)}, p);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("concatenation commutes with arithmetic") {
  auto s = MeasureSpace::make({Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  Rng rng(11);
  Partition p = validate_partition(
      {Event::of_atoms(s, {0, 2}), Event::of_atoms(s, {1}), Event::none(s)});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<CondNat> xs, ys, sums, prods;
    for (int j = 0; j < 3; ++j) {
      std::vector<Int> xv(3), yv(3);
      for (auto& v : xv) v = rng.below(50);
      for (auto& v : yv) v = rng.below(50);
      xs.emplace_back(s, xv);
      ys.emplace_back(s, yv);
      sums.push_back(xs.back() + ys.back());
      prods.push_back(xs.back() * ys.back());
    }
    CHECK(concat_values(sums, p) == concat_values(xs, p) + concat_values(ys, p));
    CHECK(concat_values(prods, p) == concat_values(xs, p) * concat_values(ys, p));
  }
}

TEST_CASE("semiring laws hold pointwise") {
  auto s = s2();
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto draw = [&] {
      return CondNat(s, {Int(rng.below(30)), Int(rng.below(30))});
    };
    CondNat x = draw(), y = draw(), z = draw();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + CondNat::constant(s, 0) == x);
    CHECK(x * CondNat::constant(s, 1) == x);
    // cancellation: x + z = y + z at an atom iff x = y there
    Comparison lhs = compare(x + z, y + z);
    Comparison rhs = compare(x, y);
    CHECK(lhs.eq == rhs.eq);
    CHECK(lhs.lt == rhs.lt);
  }
}
