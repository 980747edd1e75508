#include <sstream>

#include "qr/ring.hpp"

namespace qr {

DeltaVector to_delta(const IntElement& u) {
  if (sgn(augment(u)) != 0) throw Error(Errc::not_augmentation_zero, "element " + to_string(u) + " has nonzero augmentation");
  DeltaVector v{IntVector(u.quandle().size() - 1, 0)};
  for (const auto& [x, c] : u.terms())
    if (x != 0) v.coords[static_cast<std::size_t>(x) - 1] = c;
  return v;
}

IntElement from_delta(QuandlePtr q, const DeltaVector& v) { return from_e_coords<Integer>(std::move(q), v.coords); }

DeltaVector delta_of(std::initializer_list<long> coords) {
  DeltaVector v;
  for (const long c : coords) v.coords.emplace_back(c);
  return v;
}

std::string format_delta(const IntVector& coords, std::string_view symbol) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer& c = coords[i];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (mag != 1) out << mag;
    out << symbol << (i + 1);
    first = false;
  }
  return first ? "0" : out.str();
}

DeltaProducts::DeltaProducts(const Quandle& q) : dim_(q.size() - 1) {
  table_.reserve(dim_ * dim_);
  const std::size_t n = q.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      // (e_i - e_0)(e_j - e_0) = e_{i*j} - e_{i*0} - e_{0*j} + e_0
      std::vector<long> e(n, 0);
      const auto ei = static_cast<Elem>(i), ej = static_cast<Elem>(j);
      ++e[static_cast<std::size_t>(q.op(ei, ej))];
      --e[static_cast<std::size_t>(q.op(ei, 0))];
      --e[static_cast<std::size_t>(q.op(0, ej))];
      ++e[0];
      IntVector v(dim_);
      for (std::size_t k = 1; k < n; ++k) v[k - 1] = e[k];
      table_.push_back(std::move(v));
    }
  }
}

IntVector DeltaProducts::multiply(const IntVector& a, const IntVector& b) const {
  IntVector out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Integer s = a[i] * b[j];
      const IntVector& p = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(p[k]) != 0) out[k] += s * p[k];
    }
  }
  return out;
}

}  // namespace qr
