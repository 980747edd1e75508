#include "qr/idempotents.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>

#include "qr/errors.hpp"
#include "qr/parallel.hpp"

namespace qr {

namespace {

using Point = std::vector<std::int64_t>;

DeltaVector to_vector(const Point& x) {
  DeltaVector v;
  v.coords.reserve(x.size());
  for (const std::int64_t c : x) v.coords.emplace_back(static_cast<long>(c));
  return v;
}

// Idempotents sigma*e_0 + sum x_i E_i with x_1 = first and the rest in the box.
std::vector<DeltaVector> scan_slice(const Quandle& q, int sigma, long bound, std::int64_t first) {
  const std::size_t n = q.size();
  const std::size_t dim = n - 1;
  std::vector<DeltaVector> found;
  Point x(dim, -bound);
  if (dim > 0) x[0] = first;
  std::vector<std::int64_t> c(n), sq(n);
  const auto& table = q.table();
  while (true) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      c[i + 1] = x[i];
      sum += x[i];
    }
    c[0] = sigma - sum;
    std::fill(sq.begin(), sq.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (c[a] == 0) continue;
      const Elem* row = table.data() + a * n;
      for (std::size_t b = 0; b < n; ++b) sq[static_cast<std::size_t>(row[b])] += c[a] * c[b];
    }
    if (sq == c && !(sigma == 0 && std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })))
      found.push_back(to_vector(x));
    std::size_t i = dim;
    while (i > 1 && x[i - 1] == bound) x[--i] = -bound;
    if (i <= 1) break;
    ++x[i - 1];
  }
  return found;
}

IntElement e(const QuandlePtr& q, std::size_t x) { return IntElement::basis(q, static_cast<Elem>(x)); }

IntElement E(const QuandlePtr& q, std::size_t i) { return e(q, i) - e(q, 0); }

}  // namespace

std::vector<IntElement> IdempotentSet::elements() const {
  std::vector<IntElement> out;
  out.reserve(size());
  for (const auto& v : aug0) out.push_back(idempotent_element(quandle, 0, v));
  for (const auto& v : aug1) out.push_back(idempotent_element(quandle, 1, v));
  return out;
}

IntElement idempotent_element(const QuandlePtr& q, int sigma, const DeltaVector& v) {
  IntElement u = from_delta(q, v);
  if (sigma != 0) u.add_term(0, Integer(sigma));
  return u;
}

IdempotentSet enumerate_idempotents(QuandlePtr q, long bound, const SizeCaps& caps, unsigned jobs) {
  if (!q) throw Error(Errc::invalid_param, "null quandle");
  if (bound < 0) throw Error(Errc::invalid_param, "bound must be nonnegative");
  const std::size_t n = q->size();
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  if (checked_pow(side, n - 1) > caps.points)
    throw Error(Errc::size_limit, "box of " + std::to_string(side) + "^" + std::to_string(n - 1) + " points exceeds cap");
  // Every e-coordinate is at most (n-1)*bound+1 in size and u^2 sums n^2 products.
  const double m = static_cast<double>(n - 1) * static_cast<double>(bound) + 1.0;
  if (static_cast<double>(n) * static_cast<double>(n) * m * m > 0x1p62)
    throw Error(Errc::size_limit, "bound too large for 64-bit sweep");

  IdempotentSet out;
  out.quandle = q;
  out.bound = bound;
  const std::size_t slices = n > 1 ? static_cast<std::size_t>(side) : 1;
  for (int sigma = 0; sigma <= 1; ++sigma) {
    auto parts = parallel_map(slices, jobs, [&](std::size_t s) {
      return scan_slice(*q, sigma, bound, static_cast<std::int64_t>(s) - bound);
    });
    auto& dest = sigma == 0 ? out.aug0 : out.aug1;
    for (auto& p : parts) dest.insert(dest.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(dest.begin(), dest.end());
  }
  return out;
}

std::vector<IntElement> closed_form_family(std::string_view family, const FamilyParams& p) {
  if (p.lo > p.hi) throw Error(Errc::invalid_param, "empty parameter range");
  std::vector<IntElement> out;
  if (family == "trivial") {
    if (p.order < 1 || p.base >= p.order) throw Error(Errc::invalid_param, "trivial family needs base < order");
    const auto q = std::make_shared<const Quandle>(trivial_quandle(p.order));
    const std::size_t free = p.order - 1;
    const auto side = static_cast<std::uint64_t>(p.hi - p.lo + 1);
    if (checked_pow(side, free) > SizeCaps::defaults().closure) throw Error(Errc::size_limit, "family box too large");
    std::vector<long> a(free, p.lo);
    while (true) {
      IntElement u = e(q, p.base);
      std::size_t slot = 0;
      for (std::size_t j = 0; j < p.order; ++j) {
        if (j == p.base) continue;
        const Integer alpha = a[slot++];
        u += (e(q, j) - e(q, p.base)).scaled(alpha);
      }
      out.push_back(std::move(u));
      std::size_t i = free;
      while (i > 0 && a[i - 1] == p.hi) a[--i] = p.lo;
      if (i == 0) break;
      ++a[i - 1];
    }
    return out;
  }
  if (family == "x6") {
    if (p.variant < 1 || p.variant > 3) throw Error(Errc::invalid_param, "x6 family variant must be 1, 2 or 3");
    const auto q = std::make_shared<const Quandle>(x6_quandle());
    const auto first = static_cast<std::size_t>(2 * (p.variant - 1));
    for (long alpha = p.lo; alpha <= p.hi; ++alpha)
      out.push_back(e(q, first).scaled(Integer(alpha)) + e(q, first + 1).scaled(Integer(1 - alpha)));
    return out;
  }
  if (family == "r4") {
    const auto q = std::make_shared<const Quandle>(dihedral_quandle(4));
    if (p.variant == 1) {
      for (long beta = p.lo; beta <= p.hi; ++beta) {
        const Integer b = beta;
        out.push_back(e(q, 0) + E(q, 1).scaled(-2 * b) + E(q, 2).scaled(b) + E(q, 3).scaled(-2 * b));
      }
      return out;
    }
    if (p.variant == 2) {
      for (long b1 = p.lo; b1 <= p.hi; ++b1)
        for (long b2 = p.lo; b2 <= p.hi; ++b2)
          out.push_back(e(q, 0) + E(q, 1).scaled(Integer(b1)) + E(q, 2).scaled(Integer(b2)) +
                        E(q, 3).scaled(Integer(1 - b1)));
      return out;
    }
    throw Error(Errc::invalid_param, "r4 family variant must be 1 or 2");
  }
  throw Error(Errc::unknown_family, "unknown idempotent family '" + std::string(family) + "'");
}

ConjectureProbe conjecture_probe(std::size_t n) {
  if (n < 1 || 2 * n + 1 > 9) throw Error(Errc::invalid_param, "conjecture probe needs 1 <= n and 2n+1 <= 9");
  ConjectureProbe r;
  r.n = n;
  r.order = 2 * n + 1;
  const Quandle q = dihedral_quandle(r.order);
  r.power = delta_power(q, r.order);
  const Integer m = static_cast<unsigned long>(r.order);
  r.divisible = true;
  for (const auto& row : r.power.basis())
    for (const auto& c : row)
      if (sgn(c % m) != 0) r.divisible = false;
  return r;
}

}  // namespace qr
