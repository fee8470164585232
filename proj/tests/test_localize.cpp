#include "ivp/localize.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace ivp;

namespace {

const OverringZ Z = OverringZ::integers();
const OverringZ K = OverringZ::rationals();

OverringZ loc(long p) { return OverringZ::keep({Int(p)}); }

BinPoly half_x() { return to_binomial({Rat(0), make_rat(1, 2)}); }
BinPoly third_x() { return to_binomial({Rat(0), make_rat(1, 3)}); }
BinPoly fermat5() {
  return to_binomial(
      {Rat(0), make_rat(-1, 5), Rat(0), Rat(0), Rat(0), make_rat(1, 5)});
}

}  // namespace

TEST_CASE("member_int_extension examples") {
  CHECK(member_int_extension(half_x(), loc(3)));
  CHECK(!member_int_extension(half_x(), loc(2)));
  // integer-valued polynomials extend everywhere
  BinPoly c2({Rat(0), Rat(0), Rat(1)});
  for (const OverringZ& t : {Z, K, loc(2), OverringZ::invert({Int(5)})})
    CHECK(member_int_extension(c2, t));
}

TEST_CASE("member_int_of_T examples") {
  CHECK(member_int_of_T(half_x(), loc(3)));
  CHECK(!member_int_of_T(half_x(), loc(2)));
  CHECK(member_int_of_T(fermat5(), loc(5)));
}

TEST_CASE("criterion_holds examples") {
  CriterionVerdict a = criterion_holds(fermat5(), loc(5));
  CHECK(a.equal);
  CHECK(ideal_eq(a.lhs, unit_ideal(loc(5))));
  CHECK(ideal_eq(a.rhs, unit_ideal(loc(5))));

  CriterionVerdict b = criterion_holds(third_x(), loc(3));
  CHECK(b.equal);
  CHECK(b.lhs.generator() == 3);
  CHECK(b.rhs.generator() == 3);

  CriterionVerdict c = criterion_holds(third_x(), K);
  CHECK(c.equal);
  CHECK(ideal_eq(c.lhs, unit_ideal(K)));
}

TEST_CASE("membership in the extension implies membership in Int(T)") {
  Xorshift rng(71);
  std::vector<OverringZ> targets = {Z, K, loc(2), loc(3),
                                    OverringZ::invert({Int(2)}),
                                    OverringZ::keep({Int(2), Int(5)})};
  for (int i = 0; i < 500; ++i) {
    BinPoly f = random_poly(rng, 6, 30);
    for (const OverringZ& t : targets) {
      if (member_int_extension(f, t)) CHECK(member_int_of_T(f, t));
    }
  }
}

TEST_CASE("criterion always holds over Z") {
  // Prop for Noetherian base domains makes this a theorem, not a statistic.
  Xorshift rng(73);
  std::vector<OverringZ> targets = {Z, K, loc(2), loc(7),
                                    OverringZ::invert({Int(2), Int(3)})};
  for (int i = 0; i < 300; ++i) {
    BinPoly f = random_poly(rng, 6, 60);
    for (const OverringZ& t : targets) CHECK(criterion_holds(f, t).equal);
  }
}

TEST_CASE("membership in Int(Z) matches is_int_valued") {
  Xorshift rng(79);
  for (int i = 0; i < 300; ++i) {
    BinPoly f = random_poly(rng, 6, 10);
    CHECK(member_int_of_T(f, Z) == is_int_valued(f));
  }
}

TEST_CASE("noetherian_oracle passes on standard targets") {
  SampleSpec spec;
  spec.count = 200;
  spec.seed = 5;
  for (const OverringZ& t : {loc(2), OverringZ::invert({Int(2)}), K}) {
    OracleReport r = noetherian_oracle(spec, t);
    CHECK(r.pass == 200);
    CHECK(r.fail == 0);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("intersection_transfer_check examples") {
  std::vector<OverringZ> family = {loc(2), loc(3), loc(5)};
  OverringZ t = OverringZ::keep({Int(2), Int(3), Int(5)});
  CHECK(intersection_transfer_check(fermat5(), family, t));
  CHECK(intersection_transfer_check(half_x(), {loc(3), loc(5)},
                                    OverringZ::keep({Int(3), Int(5)})));
  CHECK(intersection_transfer_check(to_binomial({Rat(1)}), family, t));
  CHECK_THROWS_AS(intersection_transfer_check(half_x(), {loc(2), loc(3)}, Z),
                  std::invalid_argument);
}

TEST_CASE("intersection transfer holds on random inputs") {
  Xorshift rng(83);
  std::vector<OverringZ> family = {loc(2), loc(3), loc(5)};
  OverringZ t = OverringZ::keep({Int(2), Int(3), Int(5)});
  for (int i = 0; i < 200; ++i)
    CHECK(intersection_transfer_check(random_poly(rng, 6, 40), family, t));
}

TEST_CASE("value module extension agrees with direct computation") {
  // f(Z)T = f(T)T: computing the module over T directly matches extending
  // the one computed over Z.
  Xorshift rng(89);
  std::vector<OverringZ> targets = {loc(2), loc(3), OverringZ::invert({Int(2)}),
                                    K};
  for (int i = 0; i < 200; ++i) {
    BinPoly f = random_poly(rng, 6, 25);
    for (const OverringZ& t : targets)
      CHECK(ideal_eq(extend(value_module(f, Z), t), value_module(f, t)));
  }
}
