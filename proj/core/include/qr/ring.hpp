#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qr/coeff.hpp"
#include "qr/errors.hpp"
#include "qr/lattice.hpp"
#include "qr/quandle.hpp"

namespace qr {

// Element of the quandle ring k[X]: a sparse combination of basis elements
// e_x with no stored zero coefficients. The product is the bilinear extension
// of e_x e_y = e_{x*y}; it is nonassociative for nontrivial X.
template <class C>
class RingElement {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;

  explicit RingElement(QuandlePtr q, C zero = C{}) : q_(std::move(q)), zero_(Traits::zero_like(zero)) {}

  static RingElement basis(QuandlePtr q, Elem x, const C& like = C{}) {
    RingElement u(std::move(q), like);
    u.add_term(x, Traits::from_int(1, like));
    return u;
  }

  const Quandle& quandle() const { return *q_; }
  const QuandlePtr& quandle_ptr() const noexcept { return q_; }
  const std::map<Elem, C>& terms() const noexcept { return terms_; }
  const C& zero() const noexcept { return zero_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coeff(Elem x) const {
    const auto it = terms_.find(x);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(Elem x, const C& c) {
    if (x < 0 || static_cast<std::size_t>(x) >= q_->size()) throw Error(Errc::index_range, "basis index out of range");
    if (!Traits::same_domain(zero_, c)) throw Error(Errc::domain_mismatch, "coefficient from another domain");
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) it->second += c;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  RingElement& operator+=(const RingElement& o) {
    check_compatible(o);
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    check_compatible(o);
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(const RingElement& a) { return a.scaled(Traits::from_int(-1, a.zero_)); }

  RingElement scaled(const C& s) const {
    RingElement out(q_, zero_);
    if (Traits::is_zero(s)) return out;
    for (const auto& [x, c] : terms_) out.add_term(x, c * s);
    return out;
  }

  // Ring product through the operation table.
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_compatible(b);
    RingElement out(a.q_, a.zero_);
    for (const auto& [x, cx] : a.terms_)
      for (const auto& [y, cy] : b.terms_) out.add_term(a.q_->op(x, y), cx * cy);
    return out;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.same_quandle(b) && a.terms_ == b.terms_;
  }

  bool same_quandle(const RingElement& o) const { return q_ == o.q_ || *q_ == *o.q_; }

 private:
  void check_compatible(const RingElement& o) const {
    if (!same_quandle(o)) throw Error(Errc::domain_mismatch, "elements of different quandle rings");
    if (!Traits::same_domain(zero_, o.zero_)) throw Error(Errc::domain_mismatch, "different coefficient domains");
  }

  QuandlePtr q_;
  C zero_;
  std::map<Elem, C> terms_;
};

using IntElement = RingElement<Integer>;
using RatElement = RingElement<Rational>;
using ModPElement = RingElement<ModP>;

template <class C>
RingElement<C> multiply(const RingElement<C>& u, const RingElement<C>& v) {
  return u * v;
}

// Augmentation map: the sum of coefficients.
template <class C>
C augment(const RingElement<C>& u) {
  C total = u.zero();
  for (const auto& [x, c] : u.terms()) total += c;
  return total;
}

template <class C>
bool is_idempotent(const RingElement<C>& u) {
  return u * u == u;
}

template <class C>
RingElement<C> commutator(const RingElement<C>& u, const RingElement<C>& v) {
  return u * v - v * u;
}

template <class C>
bool is_central(const RingElement<C>& u) {
  for (std::size_t y = 0; y < u.quandle().size(); ++y) {
    const auto ey = RingElement<C>::basis(u.quandle_ptr(), static_cast<Elem>(y), u.zero());
    if (u * ey != ey * u) return false;
  }
  return true;
}

// w = sum of all basis elements.
template <class C>
RingElement<C> sum_of_basis(QuandlePtr q, const C& like = C{}) {
  RingElement<C> w(q, like);
  for (std::size_t x = 0; x < q->size(); ++x) w.add_term(static_cast<Elem>(x), CoeffTraits<C>::from_int(1, like));
  return w;
}

// E-basis (anchor e_0): E_i = e_i - e_0. coords[i-1] multiplies E_i.
template <class C>
RingElement<C> from_e_coords(QuandlePtr q, const std::vector<C>& coords, const C& like = C{}) {
  if (coords.size() + 1 != q->size()) throw Error(Errc::dimension_mismatch, "E-coordinates need n-1 entries");
  RingElement<C> u(q, like);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (CoeffTraits<C>::is_zero(coords[i])) continue;
    u.add_term(static_cast<Elem>(i + 1), coords[i]);
    u.add_term(0, -coords[i]);
  }
  return u;
}

template <class C>
std::string to_string(const RingElement<C>& u, std::string_view symbol = "e") {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, c] : u.terms()) {
    std::string s = CoeffTraits<C>::str(c);
    const bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (s != "1") out << s;
    out << symbol << x;
    first = false;
  }
  return out.str();
}

// Integer vector of E-coordinates for an augmentation-zero integral element.
struct DeltaVector {
  IntVector coords;

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
  friend bool operator<(const DeltaVector& a, const DeltaVector& b) { return a.coords < b.coords; }
};

DeltaVector to_delta(const IntElement& u);           // NotAugmentationZero unless augment(u) = 0
IntElement from_delta(QuandlePtr q, const DeltaVector& v);
DeltaVector delta_of(std::initializer_list<long> coords);
// "E1 - 2E2" style rendering; symbol "f" gives the commutative-quandle basis.
std::string format_delta(const IntVector& coords, std::string_view symbol = "E");

// Structure constants of Delta in the E-basis: product(i, j) = E_i E_j.
class DeltaProducts {
 public:
  explicit DeltaProducts(const Quandle& q);

  std::size_t dim() const noexcept { return dim_; }
  const IntVector& product(std::size_t i, std::size_t j) const { return table_[(i - 1) * dim_ + (j - 1)]; }
  // (sum a_i E_i)(sum b_j E_j)
  IntVector multiply(const IntVector& a, const IntVector& b) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> table_;
};

}  // namespace qr
