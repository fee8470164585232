#ifndef IVP_EXACTNUM_HPP
#define IVP_EXACTNUM_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ivp {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational (lowest terms, positive denominator).
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "num" or "num/den", optional sign, arbitrary precision.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

bool is_prime(const Int& p);

// p-adic valuation of a nonzero rational.
long val_p(const Rat& q, const Int& p);
long val_p(const Int& n, const Int& p);

// Prime-power decomposition of n >= 1, primes ascending.  Trial division
// with a Pollard rho fallback; intended for desk-scale constants.
std::vector<std::pair<Int, int>> factorize(Int n);

// A flat overring of Z: a partial localization, described by which primes
// become units.  The non-inverted prime set is either cofinite
// (invert_finite: Z[1/p1,...]) or finite (keep_finite: Z_(p1,...)).
// keep_finite({}) is the field Q; invert_finite({}) is Z itself.
class OverringZ {
 public:
  enum class Kind { invert_finite, keep_finite };

  static OverringZ integers();
  static OverringZ rationals();
  static OverringZ invert(std::vector<Int> primes);
  static OverringZ keep(std::vector<Int> primes);

  Kind kind() const { return kind_; }
  const std::vector<Int>& primes() const { return primes_; }

  bool inverts(const Int& p) const;
  bool is_field() const;
  bool is_integers() const;

  std::string to_string() const;
  // Accepts "Z", "Q", "Z_(2,3)", "Z[1/2,1/3]"; composite entries inside
  // Z[1/n] are split into their prime factors (Z[1/6] = Z[1/2,1/3]).
  static OverringZ parse(const std::string& s);

  // The overring whose non-inverted primes are the union of the members'.
  static OverringZ intersection(const std::vector<OverringZ>& members);

  friend bool operator==(const OverringZ& a, const OverringZ& b) {
    return a.kind_ == b.kind_ && a.primes_ == b.primes_;
  }

 private:
  OverringZ(Kind kind, std::vector<Int> primes);

  Kind kind_;
  std::vector<Int> primes_;  // sorted, unique, all prime
};

// A nonzero fractional ideal of an OverringZ, stored by its unique positive
// generator whose numerator and denominator carry only non-inverted primes.
class FracIdeal {
 public:
  FracIdeal(OverringZ ambient, const Rat& generator);

  const OverringZ& ambient() const { return ambient_; }
  const Rat& generator() const { return gen_; }

  std::string to_string() const;  // "(num/den)@Z_(5)"

 private:
  OverringZ ambient_;
  Rat gen_;
};

FracIdeal unit_ideal(const OverringZ& ambient);

// The ambient-module generated by a finite list of rationals.
FracIdeal zmodule_generator(const std::vector<Rat>& gens,
                            const OverringZ& ambient);

FracIdeal ideal_mul(const FracIdeal& a, const FracIdeal& b);
FracIdeal ideal_colon(const FracIdeal& a, const FracIdeal& b);
bool ideal_eq(const FracIdeal& a, const FracIdeal& b);

// Re-normalizes an ideal of Z in a larger overring.
FracIdeal extend(const FracIdeal& i, const OverringZ& t);

// The intersection with the ambient ring: (g) ∩ T, i.e. negative local
// exponents of the generator are raised to zero.
FracIdeal integral_part(const FracIdeal& i);

}  // namespace ivp

#endif
