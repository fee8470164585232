#ifndef IVP_GLOBALPIC_HPP
#define IVP_GLOBALPIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivp/localize.hpp"
#include "ivp/picdvr.hpp"

namespace ivp {

// Finitely supported family of local classes, one per prime: an element of
// the direct sum of the class groups of the Int(Z_(p)).  Zero classes are
// never stored.
class LocalClassVector {
 public:
  LocalClassVector() = default;

  void set(long p, StepClass c);  // drops zero classes
  const std::map<long, StepClass>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::string to_string() const;  // "2:[0,1];3:[0,0,1]"
  static LocalClassVector parse(const std::string& s);

  friend bool operator==(const LocalClassVector& a, const LocalClassVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<long, StepClass> entries_;
};

// Primes where a unitary ideal of Int(Z) can be nontrivial: the prime
// divisors of the constant generator, pruned of those where both the local
// class and the local valuation function vanish.
std::vector<long> support(const IntIdeal& i, const PrecisionOptions& opt = {});

// The extension map on classes: [I] -> ([I Int(Z_(p))]) over the support.
LocalClassVector pi_theta(const IntIdeal& i, const PrecisionOptions& opt = {});

// Constructive section of pi_theta: an ideal of Int(Z) mapping onto v.
IntIdeal globalize(const LocalClassVector& v);

struct PrincipalityCheck {
  bool principal = false;
  std::optional<Rat> generator;  // the constant generator when principal
};

// Whether the divisorial closure of i is a principal ideal of Int(Z).
// Decided by two routes that must agree: the extension classes all vanish,
// and the explicitly constructed constant generates the ideal (verified by
// exact generator membership and local valuation functions).
PrincipalityCheck divisorially_principal(const IntIdeal& i,
                                         const PrecisionOptions& opt = {});

// Monic gcd in Q[X] of a list of power-basis polynomials (constants give 1).
std::vector<Rat> qx_gcd(const std::vector<std::vector<Rat>>& polys);

// Seeded check of the two halves of the globalization exact sequence over Z:
// surjectivity via globalize round trips, exactness at the middle via
// divisorial principality of trivial-class products.
struct ExactnessSample {
  std::string kind;  // "surjectivity" | "kernel-trivial" | "kernel-nontrivial"
  std::string description;
  bool pass = false;
};

struct ExactnessReport {
  SampleSpec spec;
  int surjectivity_pass = 0;
  int surjectivity_fail = 0;
  int kernel_pass = 0;
  int kernel_fail = 0;
  std::vector<ExactnessSample> samples;
};

ExactnessReport exactness_report(const SampleSpec& spec);

// Random vector with support in the given primes, levels and values bounded.
LocalClassVector random_vector(Xorshift& rng, const std::vector<long>& primes,
                               int max_level, long max_value);

}  // namespace ivp

#endif
