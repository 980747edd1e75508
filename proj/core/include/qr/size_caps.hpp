#pragma once

#include <cstdint>

namespace qr {

// Search limits. `points` bounds every count-style search (box sweeps,
// homomorphism candidates, group and dyadic closures); the environment
// variable QR_SIZE_CAP overrides it.
struct SizeCaps {
  int automorphism_n = 8;
  int enumerate_n = 5;
  std::uint64_t homomorphism_maps = 10'000'000;
  std::uint64_t points = 200'000'000;
  std::uint64_t closure = 2'000'000;

  static SizeCaps defaults();
  static SizeCaps from_env();
};

// Saturating power used when checking caps.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace qr
