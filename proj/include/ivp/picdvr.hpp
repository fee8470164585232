#ifndef IVP_PICDVR_HPP
#define IVP_PICDVR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivp/exactnum.hpp"
#include "ivp/intpoly.hpp"

namespace ivp {

// An element of the class group of Int(Z_(p)): a locally constant function
// Z_p -> Z at level n (constant on balls r + p^n Z_p) taken modulo constant
// functions.  Canonical form pins the value at residue 0 to 0 and keeps the
// level minimal, so equality is a plain comparison.
class StepClass {
 public:
  explicit StepClass(long p);  // the zero class
  StepClass(long p, int level, std::vector<long> values);  // canonicalizes

  long prime() const { return p_; }
  int level() const { return level_; }
  const std::vector<long>& values() const { return values_; }
  bool is_zero() const { return level_ == 0; }

  std::string to_string() const;  // "p=2 n=1 [0,1]"

  friend bool operator==(const StepClass& a, const StepClass& b) {
    return a.p_ == b.p_ && a.level_ == b.level_ && a.values_ == b.values_;
  }

 private:
  long p_;
  int level_;
  std::vector<long> values_;
};

StepClass step_canonical(long p, int level, std::vector<long> values);
StepClass class_add(const StepClass& a, const StepClass& b);
StepClass class_neg(const StepClass& a);
// Value array of a at level n >= a.level().
std::vector<long> refine(const StepClass& a, int n);
// Class of the indicator function of the ball residue + p^n Z_p.
StepClass ball_indicator(long p, long residue, int n);

// Product of linear factors with a rational multiplier:
// scale * prod (X - root)^mult.  Ideals built by realize_class carry their
// generators in this form, which keeps valuation computations on products
// of such ideals cheap and exact.
struct LinFactored {
  Rat scale;
  std::vector<std::pair<long, int>> factors;  // sorted by root, mult >= 1
};

BinPoly expand(const LinFactored& w);

// Generator of an ideal of Int(Z) or Int(Z_(p)); either a plain polynomial
// or a linear-factored product remembered in closed form.
class GenPoly {
 public:
  explicit GenPoly(BinPoly f);
  explicit GenPoly(LinFactored w);

  const std::optional<LinFactored>& factored() const { return factored_; }
  // Binomial-basis expansion; computed on demand for factored generators.
  BinPoly binpoly() const;

  friend bool operator==(const GenPoly& a, const GenPoly& b);

 private:
  std::optional<BinPoly> plain_;
  std::optional<LinFactored> factored_;
};

// A finitely generated unitary ideal: a positive integer constant plus
// finitely many integer-valued polynomial generators.  prime() empty means
// an ideal of Int(Z); otherwise an ideal of Int(Z_(p)).
class IntIdeal {
 public:
  IntIdeal(std::optional<long> p, Int const_gen, std::vector<GenPoly> gens);

  static IntIdeal unit(std::optional<long> p = std::nullopt);

  const std::optional<long>& prime() const { return p_; }
  const Int& const_gen() const { return m_; }
  const std::vector<GenPoly>& poly_gens() const { return gens_; }

  IntIdeal localized(long p) const;  // same generators, ambient Int(Z_(p))

  std::string to_string() const;  // "<m>; [poly], [poly]"

 private:
  std::optional<long> p_;
  Int m_;
  std::vector<GenPoly> gens_;
};

IntIdeal ideal_mul(const IntIdeal& a, const IntIdeal& b);

struct PrecisionOptions {
  int max_level = 24;
  long max_entries = 1L << 24;
};

class precision_cap_error : public std::runtime_error {
 public:
  explicit precision_cap_error(const std::string& what)
      : std::runtime_error(what) {}
};

// One certified-constant piece of an ideal's valuation function: the value
// on the ball residue + p^level Z_p.
struct StepPiece {
  long residue;
  int level;
  long value;
};

// The function a -> min(v_p(m), min_f v_p(f(a))) of a local ideal, as a
// minimal certified ball partition of Z_p (pieces in residue order).
std::vector<StepPiece> ideal_step_function(const IntIdeal& i,
                                           const PrecisionOptions& opt = {});

// Dense value array at level n; throws if the function does not stabilize
// at that level.
std::vector<long> value_function(const IntIdeal& i, int n,
                                 const PrecisionOptions& opt = {});

StepClass class_of_ideal(const IntIdeal& i, const PrecisionOptions& opt = {});

// Explicit preimage of a class: an ideal whose class is sigma, built from
// the ideals (p^(e_n+1), prod_{j != r} (X - j)) whose valuation function is
// e_n on the ball of r and e_n + 1 elsewhere, where e_n = v_p((p^n - 1)!).
IntIdeal realize_class(const StepClass& sigma);

// min over x in Z_p of sum mult * v_p(x - root).
long min_total_valuation(std::vector<std::pair<long, int>> factors, long p);

long factorial_valuation(long n, long p);  // v_p(n!)

}  // namespace ivp

#endif
