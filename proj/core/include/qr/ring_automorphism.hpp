#pragma once

#include <array>
#include <vector>

#include "qr/lattice.hpp"
#include "qr/quandle.hpp"
#include "qr/size_caps.hpp"

namespace qr {

// Matrices act with columns = images: m[i][j] is the coefficient of e_i in
// psi(e_j).

Integer determinant(const IntMatrix& m);

// det(m) = +-1 and psi(e_a e_b) = psi(e_a) psi(e_b) for all a, b.
// Throws DimensionMismatch unless m is |Q| x |Q|.
bool verify_ring_morphism(const Quandle& q, const IntMatrix& m);

IntMatrix permutation_matrix(const Perm& f);  // e_x -> e_{f(x)}
IntMatrix identity_matrix(std::size_t n);

// A 2x2 block on {t1, t2} read as t1 -> a t1 + (1-a) t2,
// t2 -> (a+e) t1 + (1-a-e) t2 with e = +-1.
struct BlockParams {
  Integer alpha;
  int epsilon = -1;

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

struct AutDecomposition {
  // Source block b (elements 2b, 2b+1) is carried into block block_permutation[b].
  std::array<int, 3> block_permutation{0, 1, 2};
  std::array<BlockParams, 3> params;

  friend bool operator==(const AutDecomposition&, const AutDecomposition&) = default;
};

// Splits a ring automorphism of Z[X6] into a block permutation and three
// 2x2 blocks. Throws NotAutomorphism if verify_ring_morphism fails and
// NotBlockStructured if the matrix does not have the block shape.
AutDecomposition decompose_x6_automorphism(const IntMatrix& m);
IntMatrix reassemble(const AutDecomposition& d);

// Ring automorphisms whose basis images all lie among the idempotents found
// by enumerate_idempotents(q, bound), sorted.
std::vector<IntMatrix> ring_automorphisms_in_box(const QuandlePtr& q, long bound,
                                                 const SizeCaps& caps = SizeCaps::defaults());

}  // namespace qr
