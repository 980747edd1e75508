#pragma once

#include "qr/lattice.hpp"
#include "qr/ring.hpp"

namespace qr {

// Linear extension F : Z[Q] -> Z[P] of a quandle homomorphism f : Q -> P.
class RingMap {
 public:
  // Throws InvalidParam when f is not a quandle homomorphism.
  RingMap(QuandlePtr source, QuandlePtr target, Perm f);

  const Perm& map() const noexcept { return f_; }
  const QuandlePtr& source() const noexcept { return src_; }
  const QuandlePtr& target() const noexcept { return dst_; }

  template <class C>
  RingElement<C> operator()(const RingElement<C>& u) const {
    RingElement<C> out(dst_, u.zero());
    for (const auto& [x, c] : u.terms()) out.add_term(f_[static_cast<std::size_t>(x)], c);
    return out;
  }

  // ker F in e-coordinates of Z[Q], computed as an integer kernel.
  Lattice kernel() const;

 private:
  QuandlePtr src_;
  QuandlePtr dst_;
  Perm f_;
};

inline RingMap extend_hom(QuandlePtr source, QuandlePtr target, Perm f) {
  return RingMap(std::move(source), std::move(target), std::move(f));
}

}  // namespace qr
