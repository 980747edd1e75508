#pragma once

#include <vector>

#include "qr/lattice.hpp"
#include "qr/ring.hpp"

namespace qr {

// E_i E_j = E_{2j-i} - E_{n-i} - E_{2j} in Z[R_n], indices mod n, E_0 = 0.
DeltaVector dihedral_E_product(std::size_t n, std::size_t i, std::size_t j);

enum class PowerConvention {
  right_normed,  // Delta^{k+1} = Delta^k * Delta
  left_normed,   // Delta^{k+1} = Delta * Delta^k
};

// Delta^k(Q) as a lattice in E-coordinates (Z^{n-1}).
Lattice delta_power(const Quandle& q, std::size_t k, PowerConvention conv = PowerConvention::right_normed);
// Delta^1 .. Delta^max_k in one pass.
std::vector<Lattice> delta_powers(const Quandle& q, std::size_t max_k,
                                  PowerConvention conv = PowerConvention::right_normed);

struct Filtration {
  QuandlePtr quandle;
  std::vector<Lattice> powers;             // powers[k-1] = Delta^k
  std::vector<SmithInvariants> quotients;  // quotients[k-1] = Delta^k / Delta^{k+1}
};

Filtration filtration(QuandlePtr q, std::size_t max_k, PowerConvention conv = PowerConvention::right_normed);

// Smallest additive subgroup containing the generators and closed under the
// ring product. Tracked in E-coordinates when every generator has zero
// augmentation, else in e-coordinates (Z^n).
struct Subalgebra {
  bool e_coordinates = true;  // true: E-basis, false: e-basis
  Lattice lattice;
};

Subalgebra subalgebra_closure(QuandlePtr q, const std::vector<IntElement>& generators);

}  // namespace qr
