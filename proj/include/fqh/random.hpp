#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "fqh/scalar.hpp"

namespace fqh {

/// Deterministic Gaussian-integer sampler. All randomized checks in the
/// library and test suite draw from this, seeded either explicitly or by
/// the FQHG_SEED environment variable.
struct Sampler {
  std::mt19937_64 eng;

  explicit Sampler(std::uint64_t seed) : eng(seed) {}

  static std::uint64_t env_seed(std::uint64_t fallback = 0x51e5eedULL) {
    if (const char* s = std::getenv("FQHG_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0') return v;
    }
    return fallback;
  }

  // Reduction by modulo keeps the stream portable across standard libraries.
  long integer(long bound) {
    return static_cast<long>(eng() % (2 * bound + 1)) - bound;
  }

  Scalar gaussian_integer(long bound = 3) {
    Rat re(integer(bound));
    Rat im(integer(bound));
    return Scalar(re, im);
  }

  Vec covector(std::size_t n, long bound = 3) {
    Vec v(n);
    for (auto& x : v) x = gaussian_integer(bound);
    return v;
  }
};

}  // namespace fqh
