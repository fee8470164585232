#include "ivp/exactnum.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

// Independent oracle: the least positive value of sum a_i * q_i with
// integer coefficients in [-bound, bound], found by enumeration.  The
// generators are scaled by the common denominator first so the inner loop
// runs on machine integers.
Rat smallest_positive_combination(const std::vector<Rat>& gens, long bound) {
  Int lcm(1);
  for (const Rat& q : gens)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<long> scaled;
  for (const Rat& q : gens) {
    Int m = q.get_num() * (lcm / q.get_den());
    REQUIRE(m.fits_slong_p());
    scaled.push_back(m.get_si());
  }
  std::vector<long> coeff(gens.size(), -bound);
  long best = 0;
  while (true) {
    long v = 0;
    for (size_t i = 0; i < scaled.size(); ++i) v += coeff[i] * scaled[i];
    if (v > 0 && (best == 0 || v < best)) best = v;
    size_t k = 0;
    while (k < coeff.size() && coeff[k] == bound) coeff[k++] = -bound;
    if (k == coeff.size()) break;
    ++coeff[k];
  }
  return make_rat(Int(best), lcm);
}

Rat random_rat(Xorshift& rng, long height) {
  long num = rng.range(-height, height);
  long den = rng.range(1, height);
  return make_rat(num, den);
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(parse_rat("3/6") == make_rat(1, 2));
  CHECK(parse_rat("-4/2") == make_rat(-2));
  CHECK(rat_to_string(make_rat(1, 2)) == "1/2");
  CHECK(rat_to_string(make_rat(-7)) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("val_p basics") {
  CHECK(val_p(make_rat(12), Int(2)) == 2);
  CHECK(val_p(make_rat(1, 9), Int(3)) == -2);
  CHECK(val_p(make_rat(7), Int(5)) == 0);
  CHECK_THROWS_AS(val_p(make_rat(0), Int(2)), std::domain_error);
  CHECK_THROWS_AS(val_p(make_rat(3), Int(4)), std::invalid_argument);
}

TEST_CASE("val_p is additive") {
  std::vector<Int> primes;
  for (long p = 2; p <= 97; ++p)
    if (is_prime(Int(p))) primes.emplace_back(p);
  Xorshift rng(11);
  for (int i = 0; i < 1000; ++i) {
    Rat a = random_rat(rng, 200), b = random_rat(rng, 200);
    if (a == 0 || b == 0) continue;
    for (const Int& p : primes)
      CHECK(val_p(a * b, p) == val_p(a, p) + val_p(b, p));
  }
}

TEST_CASE("overring parse and print round trip") {
  CHECK(OverringZ::parse("Z") == OverringZ::integers());
  CHECK(OverringZ::parse("Q") == OverringZ::rationals());
  CHECK(OverringZ::parse("Z_(2,3)") == OverringZ::keep({Int(2), Int(3)}));
  CHECK(OverringZ::parse("Z[1/2,1/3]") == OverringZ::invert({Int(2), Int(3)}));
  CHECK(OverringZ::parse("Z[1/6]") == OverringZ::invert({Int(2), Int(3)}));
  CHECK(OverringZ::keep({Int(3), Int(2)}).to_string() == "Z_(2,3)");
  CHECK(OverringZ::invert({Int(5)}).to_string() == "Z[1/5]");
  CHECK_THROWS_AS(OverringZ::parse("Z_(4)"), std::invalid_argument);
  CHECK_THROWS_AS(OverringZ::parse("Zebra"), std::invalid_argument);
}

TEST_CASE("overring inversion predicate") {
  OverringZ loc5 = OverringZ::keep({Int(5)});
  CHECK(loc5.inverts(Int(2)));
  CHECK(loc5.inverts(Int(3)));
  CHECK(!loc5.inverts(Int(5)));
  OverringZ inv2 = OverringZ::invert({Int(2)});
  CHECK(inv2.inverts(Int(2)));
  CHECK(!inv2.inverts(Int(7)));
  CHECK(OverringZ::rationals().inverts(Int(2)));
  CHECK(!OverringZ::integers().inverts(Int(2)));
}

TEST_CASE("zmodule_generator examples") {
  OverringZ Z = OverringZ::integers();
  // [DERIVED] oracle run: the smallest positive a/2 + b/3 for |a|,|b| <= 6.
  CHECK(smallest_positive_combination({make_rat(1, 2), make_rat(1, 3)}, 6) ==
        make_rat(1, 6));
  CHECK(zmodule_generator({make_rat(1, 2), make_rat(1, 3)}, Z).generator() ==
        make_rat(1, 6));
  CHECK(zmodule_generator({make_rat(4), make_rat(6)}, Z).generator() == 2);
  CHECK(zmodule_generator({make_rat(4), make_rat(6)}, OverringZ::keep({Int(5)}))
            .generator() == 1);
  CHECK_THROWS_AS(zmodule_generator({make_rat(0)}, Z), std::invalid_argument);
}

TEST_CASE("zmodule_generator agrees with combination search") {
  OverringZ Z = OverringZ::integers();
  Xorshift rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 2 + rng.below(3);
    std::vector<Rat> gens;
    bool all_zero = true;
    for (size_t i = 0; i < n; ++i) {
      gens.push_back(random_rat(rng, 4));
      if (gens.back() != 0) all_zero = false;
    }
    if (all_zero) continue;
    Rat g = zmodule_generator(gens, Z).generator();
    Rat found = smallest_positive_combination(gens, 20);
    CHECK(found == g);
    for (const Rat& q : gens) {
      if (q == 0) continue;
      CHECK(Rat(q / g).get_den() == 1);  // every generator is a multiple
    }
  }
}

TEST_CASE("ideal arithmetic examples") {
  OverringZ Z = OverringZ::integers();
  FracIdeal unitZ = unit_ideal(Z);
  FracIdeal six(Z, make_rat(6));
  CHECK(ideal_colon(unitZ, six).generator() == make_rat(1, 6));
  CHECK(ideal_mul(FracIdeal(Z, make_rat(2)), FracIdeal(Z, make_rat(3)))
            .generator() == 6);
  OverringZ loc5 = OverringZ::keep({Int(5)});
  CHECK(ideal_eq(FracIdeal(loc5, make_rat(1, 6)), unit_ideal(loc5)));
  CHECK_THROWS_AS(ideal_mul(unitZ, unit_ideal(loc5)), std::invalid_argument);
  CHECK_THROWS_AS(FracIdeal(Z, make_rat(-2)), std::invalid_argument);
}

TEST_CASE("extend examples") {
  OverringZ Z = OverringZ::integers();
  FracIdeal six(Z, make_rat(6));
  CHECK(ideal_eq(extend(six, OverringZ::keep({Int(5)})),
                 unit_ideal(OverringZ::keep({Int(5)}))));
  CHECK(extend(six, OverringZ::keep({Int(2)})).generator() == 2);
  CHECK(extend(FracIdeal(Z, make_rat(35, 4)), OverringZ::rationals())
            .generator() == 1);
}

TEST_CASE("extend is idempotent and commutes with ideal_mul") {
  OverringZ Z = OverringZ::integers();
  std::vector<OverringZ> targets = {
      OverringZ::keep({Int(2)}), OverringZ::keep({Int(2), Int(7)}),
      OverringZ::invert({Int(3)}), OverringZ::rationals()};
  Xorshift rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_rat(rng, 50), b = random_rat(rng, 50);
    if (a <= 0 || b <= 0) continue;
    FracIdeal ia(Z, a), ib(Z, b);
    for (const OverringZ& t : targets) {
      FracIdeal ext = extend(ia, t);
      CHECK(ideal_eq(FracIdeal(t, ext.generator()), ext));
      CHECK(ideal_eq(extend(ideal_mul(ia, ib), t),
                     ideal_mul(extend(ia, t), extend(ib, t))));
    }
  }
}

TEST_CASE("integral part clips negative exponents") {
  OverringZ Z = OverringZ::integers();
  CHECK(integral_part(FracIdeal(Z, make_rat(5, 6))).generator() == 5);
  CHECK(integral_part(FracIdeal(Z, make_rat(1, 6))).generator() == 1);
  OverringZ loc2 = OverringZ::keep({Int(2)});
  CHECK(integral_part(FracIdeal(loc2, make_rat(3, 4))).generator() == 1);
}

TEST_CASE("ideal printing format") {
  OverringZ Z = OverringZ::integers();
  CHECK(FracIdeal(Z, make_rat(1, 6)).to_string() == "(1/6)@Z");
  CHECK(FracIdeal(OverringZ::keep({Int(5)}), make_rat(5)).to_string() ==
        "(5)@Z_(5)");
  CHECK(unit_ideal(OverringZ::rationals()).to_string() == "(1)@Q");
  CHECK(FracIdeal(OverringZ::invert({Int(2)}), make_rat(3)).to_string() ==
        "(3)@Z[1/2]");
}

TEST_CASE("overring intersection") {
  OverringZ t = OverringZ::intersection(
      {OverringZ::keep({Int(2)}), OverringZ::keep({Int(3)})});
  CHECK(t == OverringZ::keep({Int(2), Int(3)}));
  OverringZ u = OverringZ::intersection(
      {OverringZ::invert({Int(2), Int(3)}), OverringZ::invert({Int(3), Int(5)})});
  CHECK(u == OverringZ::invert({Int(3)}));
  OverringZ w = OverringZ::intersection(
      {OverringZ::invert({Int(2)}), OverringZ::keep({Int(2)})});
  CHECK(w == OverringZ::integers());
}
