#pragma once

// Reference implementations used only by tests. They avoid the library's
// algorithms on purpose: naive scans, determinantal divisors, a bezout-style
// HNF and exact rational BFS.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qr/quandle.hpp"
#include "qr/ring.hpp"

namespace oracle {

using Z = mpz_class;
using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

// Row HNF by extended-gcd row combination, pivot column by pivot column.
inline ZMat hnf(ZMat rows, std::size_t d) {
  ZMat out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      Z g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][col].get_mpz_t(), rows[i][col].get_mpz_t());
      const Z a = rows[r][col] / g, b = rows[i][col] / g;
      ZVec top(d), bottom(d);
      for (std::size_t k = 0; k < d; ++k) {
        top[k] = s * rows[r][k] + t * rows[i][k];
        bottom[k] = a * rows[i][k] - b * rows[r][k];
      }
      rows[r] = std::move(top);
      rows[i] = std::move(bottom);
    }
    if (sgn(rows[r][col]) == 0) continue;
    if (sgn(rows[r][col]) < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Z q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      for (std::size_t k = 0; k < d; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// e-coordinate product through the operation table.
inline ZVec multiply(const qr::Quandle& q, const ZVec& a, const ZVec& b) {
  const std::size_t n = q.size();
  ZVec out(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[static_cast<std::size_t>(q.op(static_cast<int>(x), static_cast<int>(y)))] += a[x] * b[y];
  return out;
}

inline ZVec e_vector_of_E(std::size_t n, const ZVec& coords) {
  ZVec v(n, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    v[i + 1] += coords[i];
    v[0] -= coords[i];
  }
  return v;
}

// Delta^k in E-coordinates, right-normed, from raw table products.
inline ZMat delta_power(const qr::Quandle& q, std::size_t k) {
  const std::size_t n = q.size(), d = n - 1;
  ZMat basis;
  for (std::size_t i = 0; i < d; ++i) {
    ZVec v(d, 0);
    v[i] = 1;
    basis.push_back(v);
  }
  for (std::size_t step = 1; step < k; ++step) {
    ZMat gens;
    for (const auto& b : basis) {
      for (std::size_t j = 0; j < d; ++j) {
        ZVec ej(d, 0);
        ej[j] = 1;
        const ZVec p = multiply(q, e_vector_of_E(n, b), e_vector_of_E(n, ej));
        gens.emplace_back(p.begin() + 1, p.end());
      }
    }
    basis = hnf(gens, d);
  }
  return basis;
}

// Smith invariant factors (> 1) of an integer matrix via gcds of k x k minors.
inline Z det(ZMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Cofactor expansion is fine for the tiny matrices used in tests.
  if (n == 1) return m[0][0];
  Z total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    ZMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      ZVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Z term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Z(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

inline std::vector<Z> invariant_factors(const ZMat& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Z> divisors{Z(1)};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    Z g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        ZMat sub(k, ZVec(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = gcd(g, det(sub));
      }
    }
    if (sgn(g) == 0) break;
    divisors.push_back(g);
  }
  std::vector<Z> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    const Z f = divisors[k] / divisors[k - 1];
    if (f != 1) factors.push_back(f);
  }
  return factors;
}

// Idempotents found by scanning raw e-coordinates: c_1..c_{n-1} in
// [-bound, bound] and c_0 over every value that could give augmentation 0 or 1,
// squared with RingElement. Returns (sigma, E-coordinates) pairs, zero excluded.
inline std::set<std::pair<int, std::vector<long>>> idempotents(const qr::QuandlePtr& q, long bound) {
  const std::size_t n = q->size();
  std::set<std::pair<int, std::vector<long>>> found;
  std::vector<long> c(n - 1, -bound);
  const long reach = static_cast<long>(n - 1) * bound;
  while (true) {
    for (long c0 = -reach; c0 <= reach + 1; ++c0) {
      qr::IntElement u(q);
      u.add_term(0, Z(c0));
      for (std::size_t i = 0; i + 1 < n; ++i) u.add_term(static_cast<int>(i + 1), Z(c[i]));
      if (u.is_zero() || !(u * u == u)) continue;
      found.insert({static_cast<int>(qr::augment(u).get_si()), c});
    }
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == bound) c[--i] = -bound;
    if (i == 0) break;
    ++c[i - 1];
  }
  return found;
}

inline bool satisfies_axioms(std::size_t n, const std::vector<int>& t) {
  auto op = [&](int x, int y) { return t[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)]; };
  const int m = static_cast<int>(n);
  for (int x = 0; x < m; ++x)
    if (op(x, x) != x) return false;
  for (int y = 0; y < m; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < m; ++x) {
      if (seen[static_cast<std::size_t>(op(x, y))]) return false;
      seen[static_cast<std::size_t>(op(x, y))] = true;
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) return false;
  return true;
}

// Every n^(n*n) table, filtered by the axioms.
inline std::vector<std::vector<int>> all_quandle_tables(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n * n, 0);
  while (true) {
    if (satisfies_axioms(n, t)) out.push_back(t);
    std::size_t i = t.size();
    while (i > 0 && t[i - 1] == static_cast<int>(n) - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

// Tables whose columns are permutations fixing their own index, no pruning.
inline std::vector<std::vector<int>> column_quandle_tables(std::size_t n) {
  std::vector<std::vector<std::vector<int>>> per_column(n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (std::size_t y = 0; y < n; ++y)
      if (p[y] == static_cast<int>(y)) per_column[y].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<int> t(n * n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) t[x * n + y] = per_column[y][pick[y]][x];
    if (satisfies_axioms(n, t)) out.push_back(t);
    std::size_t i = n;
    while (i > 0 && pick[i - 1] + 1 == per_column[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Closure of {0, 1} under (a+b)/2 and 2a-b with mpq arithmetic.
inline std::vector<std::size_t> dyadic_sizes(int depth) {
  std::set<mpq_class> s{mpq_class(0), mpq_class(1)};
  std::vector<std::size_t> sizes{s.size()};
  for (int d = 0; d < depth; ++d) {
    std::set<mpq_class> next = s;
    for (const auto& a : s)
      for (const auto& b : s) {
        mpq_class m = (a + b) / 2;
        m.canonicalize();
        mpq_class r = 2 * a - b;
        r.canonicalize();
        next.insert(m);
        next.insert(r);
      }
    s = std::move(next);
    sizes.push_back(s.size());
  }
  return sizes;
}

}  // namespace oracle
