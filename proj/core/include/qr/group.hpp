#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qr {

using Elem = int;
using Perm = std::vector<Elem>;

// A finite group given by its Cayley table. Immutable once built.
class FiniteGroup {
 public:
  // Validates associativity, the identity and the inverse table.
  static FiniteGroup from_cayley(std::size_t n, std::vector<Elem> cayley, std::string label = {});

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const { return cayley_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  Elem inverse(Elem a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Elem identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }

  bool is_abelian() const;
  // Element order of g (smallest k >= 1 with g^k = identity).
  std::size_t element_order(Elem g) const;
  // True iff `f` (as an element permutation) is a group automorphism.
  bool is_automorphism(const Perm& f) const;

 private:
  FiniteGroup(std::size_t n, std::vector<Elem> cayley, Elem identity, std::vector<Elem> inverse, std::string label);

  std::size_t n_;
  std::vector<Elem> cayley_;
  Elem identity_;
  std::vector<Elem> inverse_;
  std::string label_;
};

bool is_permutation(const Perm& p, std::size_t n);
Perm compose(const Perm& first, const Perm& second);  // x -> second(first(x))
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t n);

}  // namespace qr
