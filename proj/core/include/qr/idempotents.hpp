#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qr/filtration.hpp"
#include "qr/ring.hpp"
#include "qr/size_caps.hpp"

namespace qr {

// Idempotents u = sigma*e_0 + delta found in a box, delta's E-coordinates in
// [-bound, bound]. aug0 (sigma = 0) never lists the zero element; aug1 entry v
// stands for e_0 + from_delta(v). Both lists are sorted and duplicate-free.
struct IdempotentSet {
  QuandlePtr quandle;
  long bound = 0;
  std::vector<DeltaVector> aug0;
  std::vector<DeltaVector> aug1;

  std::size_t size() const noexcept { return aug0.size() + aug1.size(); }
  std::vector<IntElement> elements() const;
};

IdempotentSet enumerate_idempotents(QuandlePtr q, long bound, const SizeCaps& caps = SizeCaps::defaults(),
                                    unsigned jobs = 1);

// u = sigma*e_0 + from_delta(v)
IntElement idempotent_element(const QuandlePtr& q, int sigma, const DeltaVector& v);

// Closed-form idempotent families, instantiated over an integer box.
//   "trivial": Z[T_m], e_b + sum_{j != b} a_j (e_j - e_b), every a_j in [lo, hi]
//   "x6":      variant k in {1,2,3}: a e_{2k-1} + (1-a) e_{2k} (1-based names)
//   "r4":      variant 1: e_0 - 2b E_1 + b E_2 - 2b E_3
//              variant 2: e_0 + b1 E_1 + b2 E_2 + (1 - b1) E_3
struct FamilyParams {
  std::size_t order = 2;  // m, for "trivial"
  std::size_t base = 0;   // b, for "trivial" (0-based)
  int variant = 1;
  long lo = 0;
  long hi = 0;
};

std::vector<IntElement> closed_form_family(std::string_view family, const FamilyParams& params);

// Divisibility probe: is every HNF entry of Delta^{2n+1}(R_{2n+1}) divisible
// by 2n+1? This is one interpretation of an open divisibility statement and is
// reported as evidence only.
struct ConjectureProbe {
  std::size_t n = 0;
  std::size_t order = 0;
  Lattice power;
  bool divisible = false;
  static constexpr std::string_view interpretation =
      "interpreted as: Delta^{2n+1}(R_{2n+1}) is contained in (2n+1)*Delta(R_{2n+1})";
};

ConjectureProbe conjecture_probe(std::size_t n);

}  // namespace qr
