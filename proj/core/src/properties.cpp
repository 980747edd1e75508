#include <algorithm>
#include <deque>
#include <set>

#include "qr/errors.hpp"
#include "qr/quandle.hpp"

namespace qr {

namespace {

bool columns_distinct(const Quandle& q) {
  std::set<Perm> seen;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (!seen.insert(q.right_mult(static_cast<Elem>(y))).second) return false;
  }
  return true;
}

bool transitive(const Quandle& q) {
  const std::size_t n = q.size();
  std::vector<bool> reached(n, false);
  std::deque<Elem> frontier{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Elem x = frontier.front();
    frontier.pop_front();
    for (std::size_t y = 0; y < n; ++y) {
      const Elem z = q.op(x, static_cast<Elem>(y));
      if (!reached[static_cast<std::size_t>(z)]) {
        reached[static_cast<std::size_t>(z)] = true;
        ++count;
        frontier.push_back(z);
      }
    }
  }
  return count == n;
}

std::optional<std::size_t> almost_latin(const Quandle& q) {
  const std::size_t n = q.size();
  std::optional<std::size_t> m;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ea = static_cast<Elem>(a);
    std::vector<std::size_t> hits(n, 0);
    for (std::size_t x = 0; x < n; ++x) ++hits[static_cast<std::size_t>(q.op(ea, static_cast<Elem>(x)))];
    // Stab(a) = {x : a*x = a}; L_a must hit every b outside it exactly once.
    const std::size_t stab = hits[a];
    if (m && *m != stab) return std::nullopt;
    m = stab;
    for (std::size_t b = 0; b < n; ++b) {
      if (q.op(ea, static_cast<Elem>(b)) != ea && hits[b] != 1) return std::nullopt;
    }
  }
  return m;
}

}  // namespace

InnerGroup inner_group(const Quandle& q, const SizeCaps& caps) {
  const std::size_t n = q.size();
  std::set<Perm> gens;
  for (std::size_t y = 0; y < n; ++y) gens.insert(q.right_mult(static_cast<Elem>(y)));

  std::set<Perm> group{identity_perm(n)};
  std::deque<Perm> frontier{identity_perm(n)};
  while (!frontier.empty()) {
    Perm g = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& s : gens) {
      Perm h = compose(g, s);
      if (group.insert(h).second) {
        if (group.size() > caps.closure) throw Error(Errc::size_limit, "inner group exceeds closure cap");
        frontier.push_back(std::move(h));
      }
    }
  }
  return {group.size(), {gens.begin(), gens.end()}};
}

PropertyReport properties(const Quandle& q, const SizeCaps& caps) {
  const std::size_t n = q.size();
  PropertyReport r;
  r.latin = true;
  r.semi_latin = true;
  for (std::size_t a = 0; a < n && r.latin; ++a) {
    // finite: L_a injective <=> bijective
    r.latin = is_permutation(q.left_mult(static_cast<Elem>(a)), n);
  }
  r.semi_latin = r.latin;
  r.commutative = true;
  for (std::size_t x = 0; x < n && r.commutative; ++x)
    for (std::size_t y = x + 1; y < n && r.commutative; ++y)
      r.commutative = q.op(static_cast<Elem>(x), static_cast<Elem>(y)) == q.op(static_cast<Elem>(y), static_cast<Elem>(x));
  r.connected = transitive(q);
  r.faithful = columns_distinct(q);
  r.involutory = true;
  for (std::size_t y = 0; y < n && r.involutory; ++y) {
    const Perm col = q.right_mult(static_cast<Elem>(y));
    r.involutory = compose(col, col) == identity_perm(n);
  }
  r.almost_latin_degree = almost_latin(q);
  r.inn_order = inner_group(q, caps).order;
  return r;
}

}  // namespace qr
