#include <numeric>
#include <string>
#include <utility>

#include "qr/errors.hpp"
#include "qr/quandle.hpp"

namespace qr {

namespace {

Elem mod(std::int64_t v, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<Elem>(((v % m) + m) % m);
}

template <class Op>
Quandle tabulate(std::size_t n, Op op, std::string label) {
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = op(static_cast<Elem>(x), static_cast<Elem>(y));
  return Quandle::from_table(n, std::move(table), std::move(label));
}

}  // namespace

Quandle trivial_quandle(std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_param, "trivial quandle needs m >= 1");
  return tabulate(m, [](Elem x, Elem) { return x; }, "T" + std::to_string(m));
}

Quandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_param, "dihedral quandle needs n >= 1");
  return tabulate(n, [n](Elem x, Elem y) { return mod(2 * std::int64_t{y} - x, n); }, "R" + std::to_string(n));
}

Quandle commutative_quandle(std::size_t order) {
  if (order % 2 == 0) throw Error(Errc::invalid_param, "commutative quandle C_{2n+1} needs odd order");
  const auto half = static_cast<std::int64_t>(order / 2 + 1);
  return tabulate(order, [=](Elem x, Elem y) { return mod(half * (std::int64_t{x} + y), order); },
                  "C" + std::to_string(order));
}

Quandle core_quandle(const FiniteGroup& g) {
  return tabulate(g.order(), [&](Elem x, Elem y) { return g.mul(g.mul(y, g.inverse(x)), y); },
                  "Core(" + g.label() + ")");
}

Quandle conjugation_quandle(const FiniteGroup& g) {
  return tabulate(g.order(), [&](Elem x, Elem y) { return g.mul(g.mul(y, x), g.inverse(y)); },
                  "Conj(" + g.label() + ")");
}

Quandle alexander_quandle(const FiniteGroup& g, const Perm& f) {
  if (!g.is_automorphism(f)) throw Error(Errc::not_automorphism, "f does not respect the Cayley table");
  return tabulate(
      g.order(),
      [&](Elem x, Elem y) { return g.mul(f[static_cast<std::size_t>(g.mul(x, g.inverse(y)))], y); },
      "Alex(" + g.label() + ")");
}

Quandle affine_alexander_quandle(std::size_t n, std::int64_t u) {
  if (n == 0) throw Error(Errc::invalid_param, "Alexander quandle needs n >= 1");
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t unit = ((u % m) + m) % m;
  if (std::gcd(unit, m) != 1 && n > 1) throw Error(Errc::invalid_param, "Alexander multiplier must be a unit mod n");
  return tabulate(n, [=](Elem x, Elem y) { return mod(unit * x + (1 - unit) * y, n); },
                  "Alex(Z" + std::to_string(n) + "," + std::to_string(u) + ")");
}

Quandle extension_quandle(const Quandle& x, const FiniteGroup& a, const std::vector<Elem>& psi) {
  const std::size_t n = x.size();
  const std::size_t m = a.order();
  if (psi.size() != n * n) throw Error(Errc::dimension_mismatch, "cocycle must have |X|^2 entries");
  if (!a.is_abelian()) throw Error(Errc::invalid_param, "extension coefficient group must be abelian");
  for (const Elem v : psi) {
    if (v < 0 || static_cast<std::size_t>(v) >= m) throw Error(Errc::invalid_param, "cocycle value out of range");
  }
  auto at = [&](Elem p, Elem q) { return psi[static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(static_cast<Elem>(i), static_cast<Elem>(i)) != a.identity())
      throw Error(Errc::cocycle_violation, "psi(x,x) must vanish at x=" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto xi = static_cast<Elem>(i), yj = static_cast<Elem>(j), zk = static_cast<Elem>(k);
        const Elem lhs = a.mul(at(xi, yj), at(x.op(xi, yj), zk));
        const Elem rhs = a.mul(at(xi, zk), at(x.op(xi, zk), x.op(yj, zk)));
        if (lhs != rhs)
          throw Error(Errc::cocycle_violation, "2-cocycle condition fails at (" + std::to_string(i) + ", " +
                                                   std::to_string(j) + ", " + std::to_string(k) + ")");
      }
  const auto ms = static_cast<Elem>(m);
  return tabulate(
      n * m,
      [&](Elem p, Elem q) {
        const Elem px = p / ms, pa = p % ms, qx = q / ms;
        return x.op(px, qx) * ms + a.mul(pa, at(px, qx));
      },
      x.label() + "x_psi " + a.label());
}

Quandle product_quandle(const Quandle& x, const Quandle& y) {
  const auto ny = static_cast<Elem>(y.size());
  return tabulate(
      x.size() * y.size(),
      [&](Elem p, Elem q) { return x.op(p / ny, q / ny) * ny + y.op(p % ny, q % ny); },
      x.label() + "x" + y.label());
}

Quandle x6_quandle() {
  // Each column as a list of 1-based transpositions.
  const int cycles[6][2][2] = {{{3, 5}, {4, 6}}, {{3, 6}, {4, 5}}, {{1, 5}, {2, 6}},
                               {{1, 6}, {2, 5}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
  std::vector<Perm> columns;
  for (const auto& col : cycles) {
    Perm p = identity_perm(6);
    for (const auto& t : col) {
      p[static_cast<std::size_t>(t[0] - 1)] = t[1] - 1;
      p[static_cast<std::size_t>(t[1] - 1)] = t[0] - 1;
    }
    columns.push_back(std::move(p));
  }
  return Quandle::from_columns(columns, "X6");
}

}  // namespace qr
