#include "ivp/localize.hpp"

#include <stdexcept>

namespace ivp {

BinPoly random_poly(Xorshift& rng, int degree_bound, long height_bound) {
  while (true) {
    int d = static_cast<int>(rng.below(degree_bound + 1));
    std::vector<Rat> power;
    for (int i = 0; i <= d; ++i)
      power.push_back(make_rat(rng.range(-height_bound, height_bound),
                               rng.range(1, height_bound)));
    BinPoly f = to_binomial(power);
    if (!f.is_zero()) return f;
  }
}

bool member_int_extension(const BinPoly& f, const OverringZ& t) {
  if (f.is_zero()) return true;
  FracIdeal inner = integral_part(conductor(f, OverringZ::integers()));
  return ideal_eq(extend(inner, t), unit_ideal(t));
}

bool member_int_of_T(const BinPoly& f, const OverringZ& t) {
  if (f.is_zero()) return true;
  FracIdeal colon = ideal_colon(unit_ideal(t), value_module(f, t));
  return ideal_eq(integral_part(colon), unit_ideal(t));
}

CriterionVerdict criterion_holds(const BinPoly& f, const OverringZ& t) {
  if (f.is_zero()) throw std::invalid_argument("criterion of zero polynomial");
  FracIdeal lhs =
      extend(integral_part(conductor(f, OverringZ::integers())), t);
  FracIdeal rhs =
      integral_part(ideal_colon(unit_ideal(t), value_module(f, t)));
  bool equal = ideal_eq(lhs, rhs);
  return CriterionVerdict{f, t, lhs, rhs, equal};
}

OracleReport noetherian_oracle(const SampleSpec& spec, const OverringZ& t) {
  OracleReport report{spec, t};
  Xorshift rng(spec.seed);
  for (int i = 0; i < spec.count; ++i) {
    BinPoly f = random_poly(rng, spec.degree_bound, spec.height_bound);
    CriterionVerdict v = criterion_holds(f, t);
    if (v.equal) {
      ++report.pass;
    } else {
      ++report.fail;
      report.counterexamples.push_back(std::move(v));
    }
  }
  return report;
}

bool intersection_transfer_check(const BinPoly& f,
                                 const std::vector<OverringZ>& family,
                                 const OverringZ& t) {
  if (family.empty() || !(OverringZ::intersection(family) == t))
    throw std::invalid_argument("family not complete over T");
  for (const OverringZ& s : family)
    if (!member_int_of_T(f, s)) return true;  // implication holds vacuously
  return member_int_extension(f, t);
}

}  // namespace ivp
