#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qr {

enum class Errc {
  invalid_param,
  axiom_violation,
  cocycle_violation,
  not_automorphism,
  size_limit,
  dimension_mismatch,
  domain_mismatch,
  not_augmentation_zero,
  index_range,
  unknown_family,
  not_block_structured,
  zero_element,
  not_divisible_by_3,
  depth_limit,
  parse_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by table validation. `axiom` is 1 (x*x = x), 2 (column y is not a
// permutation) or 3 (right self-distributivity); witness holds the offending
// (x, y, z) with unused slots set to -1.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, std::array<int, 3> witness, const std::string& what);

  int axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  int axiom_;
  std::array<int, 3> witness_;
};

}  // namespace qr
