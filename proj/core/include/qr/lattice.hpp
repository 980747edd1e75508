#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qr {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// A subgroup of Z^d held in canonical row Hermite normal form: nonzero rows,
// pivots strictly moving right, positive pivots, and every entry above a
// pivot reduced into [0, pivot). Equal subgroups have identical bases.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0) : d_(ambient_rank) {}

  static Lattice full(std::size_t d);

  std::size_t ambient_rank() const noexcept { return d_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Integer> v) const;
  // Integer coefficients c with v = sum c_i basis_i, if v is in the lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool is_subset_of(const Lattice& other) const;
  Lattice scaled(const Integer& factor) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.d_ == b.d_ && a.basis_ == b.basis_; }

 private:
  friend Lattice hnf(const IntMatrix& rows, std::size_t d);

  std::size_t d_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Canonical HNF of the row span; throws DimensionMismatch on bad lengths.
Lattice hnf(const IntMatrix& rows, std::size_t d);
bool contains(const Lattice& lattice, std::span<const Integer> v);

struct SmithInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // factors > 1, each dividing the next

  friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

// Invariants of Z^d / L.
SmithInvariants smith_invariants(const Lattice& lattice);
// Nonzero Smith diagonal of an arbitrary integer matrix, normalized so each
// entry divides the next.
std::vector<Integer> smith_diagonal(IntMatrix m);
// Invariants of outer / inner; requires inner to be a sublattice of outer.
SmithInvariants quotient_invariants(const Lattice& outer, const Lattice& inner);
// {x in Z^m : x * rows = 0} for an m x d matrix.
Lattice integer_kernel(const IntMatrix& rows, std::size_t d);

std::string to_string(const IntVector& v);
std::string to_string(const SmithInvariants& s);  // e.g. "Z^1 + Z_2"

}  // namespace qr
