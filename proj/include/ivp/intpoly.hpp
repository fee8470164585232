#ifndef IVP_INTPOLY_HPP
#define IVP_INTPOLY_HPP

#include <string>
#include <vector>

#include "ivp/exactnum.hpp"

namespace ivp {

// Univariate rational polynomial stored by coefficients in the binomial
// basis C(X,k).  A polynomial is integer-valued on Z exactly when every
// binomial coefficient is an integer; the Z-module of its values is the
// Z-module of those coefficients (the Pascal transform is unimodular over
// Z), which makes membership and value modules coefficient-wise checks.
class BinPoly {
 public:
  BinPoly() = default;  // zero polynomial
  explicit BinPoly(std::vector<Rat> binomial_coeffs);

  static BinPoly from_power(const std::vector<Rat>& power_coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const BinPoly& a, const BinPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rat> coeffs_;  // entry k multiplies C(X,k); trailing zeros trimmed
};

// Basis changes.  to_binomial uses iterated finite differences of the value
// sequence f(0), ..., f(deg f); the two maps are mutually inverse.
BinPoly to_binomial(const std::vector<Rat>& power_coeffs);
std::vector<Rat> from_binomial(const BinPoly& f);

Rat evaluate(const BinPoly& f, const Rat& a);
Rat evaluate_power(const std::vector<Rat>& power_coeffs, const Rat& a);

bool is_int_valued(const BinPoly& f);

// f(Z) * ambient, the ambient-module generated by all values of f.
FracIdeal value_module(const BinPoly& f, const OverringZ& ambient);

// (ambient : f(Z)*ambient), as a full fractional colon.
FracIdeal conductor(const BinPoly& f, const OverringZ& ambient);

// Positive generator of f(Z)Z for integer-valued f.
Int fixed_divisor(const BinPoly& f);

BinPoly poly_add(const BinPoly& a, const BinPoly& b);
BinPoly poly_mul(const BinPoly& a, const BinPoly& b);
BinPoly poly_scale(const BinPoly& a, const Rat& c);

// External format: power-basis coefficient list, lowest degree first,
// e.g. "[0, -1/5, 0, 0, 0, 1/5]" for (X^5 - X)/5.
BinPoly parse_poly(const std::string& s);
std::string poly_to_string(const BinPoly& f);

}  // namespace ivp

#endif
