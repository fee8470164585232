#ifndef IVP_VERIFY_HPP
#define IVP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ivp::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long elapsed_ms = 0;
};

// The acceptance suite.  Every tolerance is exact (the artifact computes in
// exact arithmetic throughout); counts and bounds are pinned here.
CriterionResult localization_oracle(std::uint64_t seed);        // 1
CriterionResult value_module_oracle(std::uint64_t seed);        // 2
CriterionResult pic_bridge_roundtrip(std::uint64_t seed);       // 3
CriterionResult globalization_exactness(std::uint64_t seed);    // 4
CriterionResult example_weakjaff_reconstruction();              // 5
CriterionResult scattered_sharpness();                          // 6
CriterionResult closure_conservation(std::uint64_t seed);       // 7
// Module invariants exercised as a batch (membership transfer, class group
// laws, refinement consistency).
CriterionResult module_invariants(std::uint64_t seed);          // 8

std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace ivp::verify

#endif
