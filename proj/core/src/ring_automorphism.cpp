#include "qr/ring_automorphism.hpp"

#include <algorithm>

#include "qr/errors.hpp"
#include "qr/idempotents.hpp"

namespace qr {

namespace {

void check_square(const IntMatrix& m, std::size_t n) {
  if (m.size() != n) throw Error(Errc::dimension_mismatch, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::dimension_mismatch, "matrix rows must have length " + std::to_string(n));
}

IntVector column(const IntMatrix& m, std::size_t j) {
  IntVector c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

// e-coordinate product through the table.
IntVector product(const Quandle& q, const IntVector& a, const IntVector& b) {
  const std::size_t n = q.size();
  IntVector out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (sgn(b[y]) == 0) continue;
      out[static_cast<std::size_t>(q.op(static_cast<Elem>(x), static_cast<Elem>(y)))] += a[x] * b[y];
    }
  }
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& input) {
  check_square(input, input.size());
  IntMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool verify_ring_morphism(const Quandle& q, const IntMatrix& m) {
  const std::size_t n = q.size();
  check_square(m, n);
  if (abs(determinant(m)) != 1) return false;
  std::vector<IntVector> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = column(m, j);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (product(q, images[a], images[b]) !=
          images[static_cast<std::size_t>(q.op(static_cast<Elem>(a), static_cast<Elem>(b)))])
        return false;
  return true;
}

IntMatrix permutation_matrix(const Perm& f) {
  if (!is_permutation(f, f.size())) throw Error(Errc::invalid_param, "not a permutation");
  IntMatrix m(f.size(), IntVector(f.size(), 0));
  for (std::size_t x = 0; x < f.size(); ++x) m[static_cast<std::size_t>(f[x])][x] = 1;
  return m;
}

IntMatrix identity_matrix(std::size_t n) { return permutation_matrix(identity_perm(n)); }

AutDecomposition decompose_x6_automorphism(const IntMatrix& m) {
  static const Quandle x = x6_quandle();
  if (!verify_ring_morphism(x, m)) throw Error(Errc::not_automorphism, "matrix is not a ring automorphism of Z[X6]");
  AutDecomposition d;
  std::array<bool, 3> used{};
  for (std::size_t b = 0; b < 3; ++b) {
    int target = -1;
    for (std::size_t t = 0; t < 3; ++t) {
      for (std::size_t j = 2 * b; j < 2 * b + 2; ++j) {
        if (sgn(m[2 * t][j]) == 0 && sgn(m[2 * t + 1][j]) == 0) continue;
        if (target >= 0 && target != static_cast<int>(t))
          throw Error(Errc::not_block_structured, "block " + std::to_string(b + 1) + " spreads over several blocks");
        target = static_cast<int>(t);
      }
    }
    if (target < 0 || used[static_cast<std::size_t>(target)])
      throw Error(Errc::not_block_structured, "blocks do not form a permutation");
    used[static_cast<std::size_t>(target)] = true;
    d.block_permutation[b] = target;
    const std::size_t r = 2 * static_cast<std::size_t>(target), c = 2 * b;
    const Integer alpha = m[r][c];
    const Integer eps = m[r][c + 1] - m[r][c];
    if (abs(eps) != 1 || m[r + 1][c] != 1 - alpha || m[r + 1][c + 1] != 1 - alpha - eps)
      throw Error(Errc::not_block_structured, "block " + std::to_string(b + 1) + " is not of the (alpha, epsilon) form");
    d.params[b] = {alpha, static_cast<int>(eps.get_si())};
  }
  return d;
}

IntMatrix reassemble(const AutDecomposition& d) {
  IntMatrix m(6, IntVector(6, 0));
  for (std::size_t b = 0; b < 3; ++b) {
    const auto t = static_cast<std::size_t>(d.block_permutation[b]);
    if (t > 2) throw Error(Errc::invalid_param, "block index out of range");
    const Integer& a = d.params[b].alpha;
    const Integer e = d.params[b].epsilon;
    m[2 * t][2 * b] = a;
    m[2 * t + 1][2 * b] = 1 - a;
    m[2 * t][2 * b + 1] = a + e;
    m[2 * t + 1][2 * b + 1] = 1 - a - e;
  }
  return m;
}

std::vector<IntMatrix> ring_automorphisms_in_box(const QuandlePtr& q, long bound, const SizeCaps& caps) {
  const IdempotentSet set = enumerate_idempotents(q, bound, caps);
  const std::size_t n = q->size();
  std::vector<IntVector> candidates;
  for (const auto& u : set.elements()) {
    IntVector v(n, 0);
    for (const auto& [x, c] : u.terms()) v[static_cast<std::size_t>(x)] = c;
    candidates.push_back(std::move(v));
  }
  const std::size_t k = candidates.size();
  // products[i*k + j] = candidates[i] candidates[j]
  std::vector<IntVector> products(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) products[i * k + j] = product(*q, candidates[i], candidates[j]);

  std::vector<IntMatrix> out;
  std::vector<std::size_t> choice(n);
  auto consistent = [&](std::size_t x) {
    for (std::size_t a = 0; a <= x; ++a) {
      for (std::size_t b = 0; b <= x; ++b) {
        if (a != x && b != x) continue;
        const auto ab = static_cast<std::size_t>(q->op(static_cast<Elem>(a), static_cast<Elem>(b)));
        if (ab > x) continue;
        if (products[choice[a] * k + choice[b]] != candidates[choice[ab]]) return false;
      }
    }
    // Images already placed at a*b > x get checked when ab is assigned.
    for (std::size_t a = 0; a < x; ++a) {
      for (std::size_t b = 0; b < x; ++b) {
        const auto ab = static_cast<std::size_t>(q->op(static_cast<Elem>(a), static_cast<Elem>(b)));
        if (ab == x && products[choice[a] * k + choice[b]] != candidates[choice[x]]) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      IntMatrix m(n, IntVector(n));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = candidates[choice[j]][i];
      if (abs(determinant(m)) == 1) out.push_back(std::move(m));
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      choice[x] = c;
      if (consistent(x)) self(self, x + 1);
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qr
