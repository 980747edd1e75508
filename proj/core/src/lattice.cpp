#include "qr/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qr/errors.hpp"

namespace qr {

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void axpy(IntVector& row, const Integer& q, const IntVector& other) {
  for (std::size_t i = 0; i < row.size(); ++i) row[i] -= q * other[i];
}

}  // namespace

Lattice Lattice::full(std::size_t d) {
  IntMatrix rows(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) rows[i][i] = 1;
  return hnf(rows, d);
}

Lattice hnf(const IntMatrix& rows, std::size_t d) {
  IntMatrix a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != d) throw Error(Errc::dimension_mismatch, "row length differs from ambient rank");
    if (!is_zero(r)) a.push_back(r);
  }

  Lattice out(d);
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (sgn(a[i][c]) != 0 && (best == a.size() || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        axpy(a[i], q, a[r]);
        if (sgn(a[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (r >= a.size() || sgn(a[r][c]) == 0) continue;
    if (sgn(a[r][c]) < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) != 0) axpy(a[i], q, a[r]);
    }
    out.pivots_.push_back(c);
    ++r;
  }
  a.resize(r);
  out.basis_ = std::move(a);
  return out;
}

std::optional<IntVector> Lattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != d_) throw Error(Errc::dimension_mismatch, "vector length differs from ambient rank");
  IntVector rest(v.begin(), v.end());
  IntVector coeffs(basis_.size());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    for (; col < p; ++col)
      if (sgn(rest[col]) != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return std::nullopt;
    coeffs[i] = rest[p] / basis_[i][p];
    axpy(rest, coeffs[i], basis_[i]);
    col = p + 1;
  }
  for (; col < d_; ++col)
    if (sgn(rest[col]) != 0) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool contains(const Lattice& lattice, std::span<const Integer> v) { return lattice.contains(v); }

bool Lattice::is_subset_of(const Lattice& other) const {
  if (other.d_ != d_) throw Error(Errc::dimension_mismatch, "lattices live in different ambient ranks");
  return std::all_of(basis_.begin(), basis_.end(), [&](const IntVector& row) { return other.contains(row); });
}

Lattice Lattice::scaled(const Integer& factor) const {
  IntMatrix rows = basis_;
  for (auto& r : rows)
    for (auto& x : r) x *= factor;
  return hnf(rows, d_);
}

SmithInvariants smith_invariants(const Lattice& lattice) {
  SmithInvariants out;
  out.free_rank = lattice.ambient_rank() - lattice.rank();
  for (auto& f : smith_diagonal(lattice.basis()))
    if (f > 1) out.torsion.push_back(std::move(f));
  return out;
}

SmithInvariants quotient_invariants(const Lattice& outer, const Lattice& inner) {
  IntMatrix coords;
  coords.reserve(inner.rank());
  for (const auto& row : inner.basis()) {
    auto c = outer.coordinates(row);
    if (!c) throw Error(Errc::dimension_mismatch, "inner lattice is not contained in outer lattice");
    coords.push_back(std::move(*c));
  }
  SmithInvariants out;
  const Lattice in_outer = hnf(coords, outer.rank());
  out.free_rank = outer.rank() - in_outer.rank();
  for (auto& f : smith_diagonal(in_outer.basis()))
    if (f > 1) out.torsion.push_back(std::move(f));
  return out;
}

Lattice integer_kernel(const IntMatrix& rows, std::size_t d) {
  const std::size_t m = rows.size();
  // HNF of [rows | I]; rows whose left block vanishes span the kernel.
  IntMatrix augmented(m, IntVector(d + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != d) throw Error(Errc::dimension_mismatch, "row length differs from d");
    std::copy(rows[i].begin(), rows[i].end(), augmented[i].begin());
    augmented[i][d + i] = 1;
  }
  const Lattice h = hnf(augmented, d + m);
  IntMatrix kernel;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h.pivots()[i] < d) continue;
    kernel.emplace_back(h.basis()[i].begin() + static_cast<std::ptrdiff_t>(d), h.basis()[i].end());
  }
  return hnf(kernel, m);
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

std::string to_string(const SmithInvariants& s) {
  std::ostringstream out;
  bool first = true;
  if (s.free_rank > 0) {
    out << "Z";
    if (s.free_rank > 1) out << "^" << s.free_rank;
    first = false;
  }
  for (const auto& t : s.torsion) {
    out << (first ? "" : " + ") << "Z_" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace qr
