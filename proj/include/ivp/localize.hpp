#ifndef IVP_LOCALIZE_HPP
#define IVP_LOCALIZE_HPP

#include <cstdint>
#include <vector>

#include "ivp/exactnum.hpp"
#include "ivp/intpoly.hpp"
#include "ivp/rng.hpp"

namespace ivp {

// Deterministic sampling request, shared by the oracle drivers here and by
// the globalization report driver.
struct SampleSpec {
  int degree_bound = 6;
  long height_bound = 100;
  int count = 200;
  std::uint64_t seed = 1;
};

// Nonzero polynomial with power-basis coefficients of height at most
// height_bound and degree at most degree_bound.
BinPoly random_poly(Xorshift& rng, int degree_bound, long height_bound);

// Both sides of the localization criterion for one polynomial:
// lhs = (Z :_Z f(Z))T and rhs = (T :_T f(Z)T).  The conductors are taken
// inside the ring, so each side is clipped to its ambient before comparing.
struct CriterionVerdict {
  BinPoly f;
  OverringZ t;
  FracIdeal lhs;
  FracIdeal rhs;
  bool equal;
};

// f lies in Int(Z)T.
bool member_int_extension(const BinPoly& f, const OverringZ& t);
// f lies in Int(T).
bool member_int_of_T(const BinPoly& f, const OverringZ& t);

CriterionVerdict criterion_holds(const BinPoly& f, const OverringZ& t);

// Seeded sweep of criterion_holds.  Z is Noetherian, so every sample must
// come out equal; a counterexample signals an implementation bug.
struct OracleReport {
  SampleSpec spec;
  OverringZ overring;
  int pass = 0;
  int fail = 0;
  std::vector<CriterionVerdict> counterexamples;
};

OracleReport noetherian_oracle(const SampleSpec& spec, const OverringZ& t);

// Element-level instance of the intersection transfer: if f is in Int(S)
// for every member S of a family intersecting to T, then f is in Int(Z)T.
// Throws if the family does not intersect to t.
bool intersection_transfer_check(const BinPoly& f,
                                 const std::vector<OverringZ>& family,
                                 const OverringZ& t);

}  // namespace ivp

#endif
