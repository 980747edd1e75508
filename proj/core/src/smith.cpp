#include <algorithm>
#include <utility>

#include "qr/lattice.hpp"

namespace qr {

namespace {

// Position of the nonzero entry of smallest magnitude in the trailing
// submatrix starting at (t, t), or rows() when it is zero.
std::pair<std::size_t, std::size_t> smallest_entry(const IntMatrix& m, std::size_t t, std::size_t cols) {
  std::pair<std::size_t, std::size_t> best{m.size(), 0};
  for (std::size_t i = t; i < m.size(); ++i)
    for (std::size_t j = t; j < cols; ++j) {
      if (sgn(m[i][j]) == 0) continue;
      if (best.first == m.size() || mpz_cmpabs(m[i][j].get_mpz_t(), m[best.first][best.second].get_mpz_t()) < 0)
        best = {i, j};
    }
  return best;
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m.front().size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m.size(), cols); ++t) {
    auto [pi, pj] = smallest_entry(m, t, cols);
    if (pi == m.size()) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.size(); ++i) {
        if (sgn(m[i][t]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < m.size(); ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) dirty = true;
      }
      if (!dirty) break;
      // A smaller remainder appeared in row/column t; move it to the pivot.
      auto [ri, rj] = smallest_entry(m, t, cols);
      std::swap(m[t], m[ri]);
      for (auto& row : m) std::swap(row[t], row[rj]);
    }
    diag.push_back(abs(m[t][t]));
  }
  // Invariant-factor normalization: d_i | d_{i+1}.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace qr
