#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qr/quandle.hpp"

namespace qr::cli {

// Quandle specifier grammar:
//   R:<n>  C:<odd>  T:<m>  X6  core:Z<n>  conj:Z<n>  alex:Z<n>:<u>
//   prod:(<spec>,<spec>)  file:<path>
struct QuandleSpec {
  enum class Kind { dihedral, commutative, trivial, x6, core, conj, alexander, product, file };

  Kind kind = Kind::dihedral;
  std::size_t n = 0;
  std::int64_t unit = 0;
  std::string path;
  std::vector<QuandleSpec> factors;

  // Canonical text form; parse(print(s)) == s.
  std::string print() const;
  // Symbol for E-basis coordinates: "f" for commutative quandles, else "E".
  std::string_view delta_symbol() const noexcept { return kind == Kind::commutative ? "f" : "E"; }

  friend bool operator==(const QuandleSpec&, const QuandleSpec&) = default;
};

// Throws Error(parse_error) on malformed input.
QuandleSpec parse_quandle_spec(std::string_view text);

// Builds the quandle, labelled with the canonical spec.
Quandle build_quandle(const QuandleSpec& spec);

}  // namespace qr::cli
