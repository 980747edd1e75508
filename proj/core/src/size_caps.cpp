#include "qr/size_caps.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace qr {

SizeCaps SizeCaps::defaults() { return {}; }

SizeCaps SizeCaps::from_env() {
  SizeCaps caps;
  if (const char* env = std::getenv("QR_SIZE_CAP"); env != nullptr && *env != '\0') {
    try {
      const auto value = std::stoull(env);
      caps.points = value;
      caps.homomorphism_maps = value;
      caps.closure = value;
    } catch (const std::exception&) {
      // malformed values fall back to the defaults
    }
  }
  return caps;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

}  // namespace qr
