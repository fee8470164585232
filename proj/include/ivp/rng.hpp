#ifndef IVP_RNG_HPP
#define IVP_RNG_HPP

#include <cstdint>

namespace ivp {

// xorshift64* with fixed multiplier; all sampling in the project goes
// through this so that seeded runs are reproducible bit for bit on any
// platform.  next(): s ^= s>>12; s ^= s<<25; s ^= s>>27; return s * M.
class Xorshift {
 public:
  explicit Xorshift(std::uint64_t seed)
      : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform-ish value in [0, bound); bound > 0.  Plain modulo: the bias is
  // irrelevant for test sampling and the result is platform-independent.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ivp

#endif
