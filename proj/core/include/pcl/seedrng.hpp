#ifndef PCL_SEEDRNG_HPP
#define PCL_SEEDRNG_HPP

#include <cstdint>

namespace pcl {

// Deterministic xorshift generator; all randomized choices in the library
// (coordinate frames, splitting elements in factorization) go through this
// so that runs are reproducible bit for bit from a single seed.
class SeedRng {
  public:
    explicit SeedRng(std::uint64_t seed = 0) : s_(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull) {}

    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // small signed integer in [-b, b]
    long small(long b) { return static_cast<long>(below(2 * b + 1)) - b; }

  private:
    std::uint64_t s_;
};

} // namespace pcl

#endif
