#include "qr/ring_map.hpp"

#include "qr/errors.hpp"

namespace qr {

RingMap::RingMap(QuandlePtr source, QuandlePtr target, Perm f)
    : src_(std::move(source)), dst_(std::move(target)), f_(std::move(f)) {
  if (!is_homomorphism(*src_, *dst_, f_)) throw Error(Errc::invalid_param, "map is not a quandle homomorphism");
}

Lattice RingMap::kernel() const {
  IntMatrix images(src_->size(), IntVector(dst_->size(), 0));
  for (std::size_t x = 0; x < src_->size(); ++x) images[x][static_cast<std::size_t>(f_[x])] = 1;
  return integer_kernel(images, dst_->size());
}

}  // namespace qr
