#include <algorithm>
#include <functional>
#include <string>

#include "qr/errors.hpp"
#include "qr/quandle.hpp"

namespace qr {

namespace {

constexpr Elem kUnset = -1;

// Checks every product whose three participants are assigned and at least one
// of them is `k`.
bool consistent_at(const Quandle& q, const Quandle& p, const Perm& f, std::size_t k) {
  for (std::size_t x = 0; x <= k; ++x) {
    for (std::size_t y = 0; y <= k; ++y) {
      const auto xy = static_cast<std::size_t>(q.op(static_cast<Elem>(x), static_cast<Elem>(y)));
      if (xy > k || (x != k && y != k && xy != k)) continue;
      if (f[xy] != p.op(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_homomorphism(const Quandle& q, const Quandle& p, const Perm& f) {
  if (f.size() != q.size()) return false;
  for (const Elem v : f)
    if (v < 0 || static_cast<std::size_t>(v) >= p.size()) return false;
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) {
      const Elem xy = q.op(static_cast<Elem>(x), static_cast<Elem>(y));
      if (f[static_cast<std::size_t>(xy)] != p.op(f[x], f[y])) return false;
    }
  return true;
}

std::vector<Perm> automorphisms(const Quandle& q, const SizeCaps& caps) {
  const std::size_t n = q.size();
  if (n > static_cast<std::size_t>(caps.automorphism_n))
    throw Error(Errc::size_limit, "automorphism search capped at n=" + std::to_string(caps.automorphism_n));
  std::vector<Perm> out;
  Perm sigma(n, kUnset);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(sigma);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      sigma[k] = static_cast<Elem>(v);
      if (consistent_at(q, q, sigma, k)) {
        used[v] = true;
        extend(k + 1);
        used[v] = false;
      }
    }
    sigma[k] = kUnset;
  };
  extend(0);
  return out;
}

std::vector<Perm> homomorphisms(const Quandle& q, const Quandle& p, const SizeCaps& caps) {
  const std::size_t n = q.size();
  if (checked_pow(p.size(), n) > caps.homomorphism_maps)
    throw Error(Errc::size_limit, "homomorphism search space |P|^|Q| exceeds cap");
  std::vector<Perm> out;
  Perm f(n, kUnset);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < p.size(); ++v) {
      f[k] = static_cast<Elem>(v);
      if (consistent_at(q, p, f, k)) extend(k + 1);
    }
    f[k] = kUnset;
  };
  extend(0);
  return out;
}

std::vector<Quandle> enumerate_quandles(std::size_t n, const SizeCaps& caps) {
  if (n == 0) throw Error(Errc::invalid_param, "n must be positive");
  if (n > static_cast<std::size_t>(caps.enumerate_n))
    throw Error(Errc::size_limit, "enumerate_quandles capped at n=" + std::to_string(caps.enumerate_n));

  // Candidate columns: permutations fixing their own index (axioms 1 and 2).
  std::vector<std::vector<Perm>> candidates(n);
  Perm p = identity_perm(n);
  do {
    for (std::size_t y = 0; y < n; ++y)
      if (p[y] == static_cast<Elem>(y)) candidates[y].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<Perm> cols(n);
  std::vector<Quandle> out;
  // Axiom 3 as R_y R_z = R_z R_{y*z} (apply left to right), checked once all
  // three columns are known.
  auto distributive_at = [&](std::size_t k) {
    for (std::size_t y = 0; y <= k; ++y) {
      for (std::size_t z = 0; z <= k; ++z) {
        const auto w = static_cast<std::size_t>(cols[z][y]);
        if (w > k || (y != k && z != k && w != k)) continue;
        for (std::size_t x = 0; x < n; ++x) {
          const auto lhs = cols[z][static_cast<std::size_t>(cols[y][x])];
          const auto rhs = cols[w][static_cast<std::size_t>(cols[z][x])];
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  };
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(Quandle::from_columns(cols));
      return;
    }
    for (const Perm& c : candidates[k]) {
      cols[k] = c;
      if (distributive_at(k)) extend(k + 1);
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const Quandle& a, const Quandle& b) { return a.table() < b.table(); });
  return out;
}

}  // namespace qr
