#include "qr/filtration.hpp"

#include <algorithm>
#include <utility>

#include "qr/errors.hpp"

namespace qr {

DeltaVector dihedral_E_product(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 2 || i < 1 || j < 1 || i >= n || j >= n)
    throw Error(Errc::index_range, "dihedral_E_product needs 1 <= i, j <= n-1");
  DeltaVector v{IntVector(n - 1, 0)};
  auto add = [&](std::size_t idx, long c) {
    idx %= n;
    if (idx != 0) v.coords[idx - 1] += c;
  };
  add(2 * j + n - i, 1);
  add(n - i, -1);
  add(2 * j, -1);
  return v;
}

namespace {

Lattice next_power(const DeltaProducts& products, const Lattice& current, PowerConvention conv) {
  const std::size_t d = products.dim();
  IntMatrix gens;
  gens.reserve(current.rank() * d);
  for (const IntVector& b : current.basis()) {
    for (std::size_t j = 1; j <= d; ++j) {
      IntVector out(d, 0);
      for (std::size_t i = 1; i <= d; ++i) {
        if (sgn(b[i - 1]) == 0) continue;
        const IntVector& p =
            conv == PowerConvention::right_normed ? products.product(i, j) : products.product(j, i);
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(p[k]) != 0) out[k] += b[i - 1] * p[k];
      }
      gens.push_back(std::move(out));
    }
  }
  return hnf(gens, d);
}

}  // namespace

std::vector<Lattice> delta_powers(const Quandle& q, std::size_t max_k, PowerConvention conv) {
  if (max_k < 1) throw Error(Errc::invalid_param, "power must be >= 1");
  const DeltaProducts products(q);
  std::vector<Lattice> out;
  out.reserve(max_k);
  out.push_back(Lattice::full(products.dim()));
  while (out.size() < max_k) out.push_back(next_power(products, out.back(), conv));
  return out;
}

Lattice delta_power(const Quandle& q, std::size_t k, PowerConvention conv) {
  return std::move(delta_powers(q, k, conv).back());
}

Filtration filtration(QuandlePtr q, std::size_t max_k, PowerConvention conv) {
  if (max_k < 2) throw Error(Errc::invalid_param, "filtration needs max_k >= 2");
  Filtration f;
  f.powers = delta_powers(*q, max_k, conv);
  f.quandle = std::move(q);
  for (std::size_t k = 0; k + 1 < f.powers.size(); ++k)
    f.quotients.push_back(quotient_invariants(f.powers[k], f.powers[k + 1]));
  return f;
}

Subalgebra subalgebra_closure(QuandlePtr q, const std::vector<IntElement>& generators) {
  const std::size_t n = q->size();
  Subalgebra out;
  out.e_coordinates = std::all_of(generators.begin(), generators.end(),
                                  [](const IntElement& g) { return sgn(augment(g)) == 0; });
  const std::size_t d = out.e_coordinates ? n - 1 : n;

  auto to_coords = [&](const IntElement& u) {
    if (out.e_coordinates) return to_delta(u).coords;
    IntVector v(n, 0);
    for (const auto& [x, c] : u.terms()) v[static_cast<std::size_t>(x)] = c;
    return v;
  };
  auto to_element = [&](const IntVector& v) {
    if (out.e_coordinates) return from_delta(q, DeltaVector{v});
    IntElement u(q);
    for (std::size_t x = 0; x < n; ++x)
      if (sgn(v[x]) != 0) u.add_term(static_cast<Elem>(x), v[x]);
    return u;
  };

  IntMatrix rows;
  for (const auto& g : generators) rows.push_back(to_coords(g));
  Lattice current = hnf(rows, d);
  for (;;) {
    IntMatrix next = current.basis();
    std::vector<IntElement> elems;
    for (const auto& b : current.basis()) elems.push_back(to_element(b));
    for (const auto& a : elems)
      for (const auto& b : elems) next.push_back(to_coords(a * b));
    Lattice grown = hnf(next, d);
    if (grown == current) break;
    current = std::move(grown);
  }
  out.lattice = std::move(current);
  return out;
}

}  // namespace qr
