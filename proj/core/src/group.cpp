#include "qr/group.hpp"

#include <optional>
#include <utility>

#include "qr/errors.hpp"

namespace qr {

bool is_permutation(const Perm& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const Elem x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Perm compose(const Perm& first, const Perm& second) {
  Perm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[static_cast<std::size_t>(first[i])];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<Elem>(i);
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>(i);
  return p;
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> cayley, Elem identity, std::vector<Elem> inverse,
                         std::string label)
    : n_(n), cayley_(std::move(cayley)), identity_(identity), inverse_(std::move(inverse)), label_(std::move(label)) {}

FiniteGroup FiniteGroup::from_cayley(std::size_t n, std::vector<Elem> cayley, std::string label) {
  if (n == 0) throw Error(Errc::invalid_param, "group must be non-empty");
  if (cayley.size() != n * n) throw Error(Errc::dimension_mismatch, "Cayley table must be n*n");
  for (const Elem v : cayley) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::invalid_param, "Cayley entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(cayley[a * n + b]); };

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw Error(Errc::invalid_param, "Cayley table has no identity");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(Errc::invalid_param, "Cayley table is not associative");

  std::vector<Elem> inv(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == static_cast<std::size_t>(*identity) && at(b, a) == static_cast<std::size_t>(*identity)) {
        inv[a] = static_cast<Elem>(b);
        break;
      }
    }
    if (inv[a] < 0) throw Error(Errc::invalid_param, "element without inverse");
  }
  return FiniteGroup(n, std::move(cayley), *identity, std::move(inv), std::move(label));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_param, "cyclic group order must be positive");
  std::vector<Elem> cayley(n * n);
  std::vector<Elem> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cayley[a * n + b] = static_cast<Elem>((a + b) % n);
    inv[a] = static_cast<Elem>((n - a) % n);
  }
  return FiniteGroup(n, std::move(cayley), 0, std::move(inv), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Elem> cayley(n * n);
  std::vector<Elem> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x / nb);
    const auto xb = static_cast<Elem>(x % nb);
    inv[x] = a.inverse(xa) * static_cast<Elem>(nb) + b.inverse(xb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Elem>(y / nb);
      const auto yb = static_cast<Elem>(y % nb);
      cayley[x * n + y] = a.mul(xa, ya) * static_cast<Elem>(nb) + b.mul(xb, yb);
    }
  }
  const Elem id = a.identity() * static_cast<Elem>(nb) + b.identity();
  return FiniteGroup(n, std::move(cayley), id, std::move(inv), a.label() + "x" + b.label());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem p = g; p != identity_; p = mul(p, g)) ++k;
  return k;
}

bool FiniteGroup::is_automorphism(const Perm& f) const {
  if (!is_permutation(f, n_)) return false;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      const Elem ab = mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (f[static_cast<std::size_t>(ab)] != mul(f[a], f[b])) return false;
    }
  return true;
}

}  // namespace qr
