#include "qr/corez.hpp"

#include <random>
#include <sstream>

#include "qr/errors.hpp"
#include "qr/parallel.hpp"

namespace qr::corez {

Element Element::basis(const Integer& i, const Integer& c) {
  Element u;
  u.add_term(i, c);
  return u;
}

Integer Element::coeff(const Integer& i) const {
  const auto it = terms_.find(i);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Element::add_term(const Integer& i, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

Element Element::scaled(const Integer& s) const {
  Element out;
  for (const auto& [i, c] : terms_) out.add_term(i, c * s);
  return out;
}

Element multiply(const Element& u, const Element& v) {
  Element out;
  for (const auto& [i, a] : u.terms())
    for (const auto& [j, b] : v.terms()) out.add_term(2 * j - i, a * b);
  return out;
}

Element commutator(const Element& u, const Element& v) { return multiply(u, v) - multiply(v, u); }

std::string to_string(const Element& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : u.terms()) {
    const Integer mag = abs(c);
    out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (mag != 1) out << mag;
    out << 'e' << i;
    first = false;
  }
  return out.str();
}

Extrema extrema(const Element& u) {
  if (u.is_zero()) throw Error(Errc::zero_element, "extrema of the zero element");
  const auto& lo = *u.terms().begin();
  const auto& hi = *u.terms().rbegin();
  return {{lo.first, lo.second}, {hi.first, hi.second}};
}

IdempotenceCertificate is_idempotent(const Element& u) {
  IdempotenceCertificate cert;
  if (u.is_zero()) {
    cert.idempotent = true;
    cert.reason = "zero element";
    return cert;
  }
  const Element sq = multiply(u, u);
  cert.idempotent = sq == u;
  if (u.support_size() == 1) {
    const Integer& a = u.terms().begin()->second;
    cert.reason = cert.idempotent ? "basis element" : "coefficient " + a.get_str() + " with a^2 = " +
                                                          Integer(a * a).get_str() + " != a";
    return cert;
  }
  const Extrema eu = extrema(u);
  const Extrema es = extrema(sq);
  cert.u = eu;
  cert.square = es;
  std::ostringstream r;
  r << "min(u^2) at " << es.min.index << " < min(u) at " << eu.min.index << " <= max(u) at " << eu.max.index
    << " < max(u^2) at " << es.max.index;
  cert.reason = r.str();
  return cert;
}

bool commutator_identity(const Integer& a) {
  if (sgn(a % 3) != 0) throw Error(Errc::not_divisible_by_3, a.get_str() + " is not divisible by 3");
  const Integer t = a / 3;
  const Element lhs = commutator(Element::basis(t), Element::basis(2 * t));
  return lhs == Element::basis(a) - Element::basis(0);
}

OrderProbe order_probe(long window) {
  if (window < 1) throw Error(Errc::invalid_param, "window must be >= 1");
  OrderProbe r;
  r.window = window;
  for (long i = -window; i <= window; ++i) {
    for (long j = i + 1; j <= window; ++j) {
      for (long k = -window; k <= window; ++k) {
        r.checks += 2;
        if (!(2 * i - k < 2 * j - k)) ++r.left_failures;
        if (!(2 * k - i > 2 * k - j)) ++r.right_failures;
      }
    }
  }
  return r;
}

Element random_element(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> size_dist(2, 6), exp_dist(-20, 20), coeff_dist(1, 9), sign_dist(0, 1);
  const int size = size_dist(rng);
  Element u;
  while (static_cast<int>(u.support_size()) < size) {
    const Integer i = exp_dist(rng);
    if (sgn(u.coeff(i)) != 0) continue;
    const int c = coeff_dist(rng);
    u.add_term(i, sign_dist(rng) ? c : -c);
  }
  return u;
}

RandomSweep extremal_sweep(std::size_t samples, std::uint64_t seed, unsigned jobs) {
  RandomSweep r;
  r.seed = seed;
  r.samples = samples;
  const auto ok = parallel_map(samples, jobs, [seed](std::size_t s) {
    const Element u = random_element(seed, s);
    const Element sq = multiply(u, u);
    if (sq == u) return false;
    const Extrema eu = extrema(u), es = extrema(sq);
    const bool chain = es.min.index < eu.min.index && eu.min.index <= eu.max.index && eu.max.index < es.max.index;
    const bool positions = es.min.index == 2 * eu.min.index - eu.max.index && es.max.index == 2 * eu.max.index - eu.min.index;
    const Integer product = eu.min.coeff * eu.max.coeff;
    return chain && positions && es.min.coeff == product && es.max.coeff == product;
  });
  for (std::size_t s = 0; s < samples; ++s) {
    if (!ok[s]) {
      ++r.failures;
      r.failing_samples.push_back(s);
    }
  }
  return r;
}

WindowProbe delta2_window_probe(long window) {
  if (window < 1) throw Error(Errc::invalid_param, "window must be >= 1");
  WindowProbe r;
  r.window = window;
  // Products of E-generators live on exponents [-3W, 3W]; coordinate of
  // E_k (k != 0) sits at slot k + 3W, skipping 0.
  const long span = 3 * window;
  const std::size_t d = static_cast<std::size_t>(2 * span);
  auto slot = [span](long k) { return static_cast<std::size_t>(k < 0 ? k + span : k + span - 1); };
  auto E = [](long i) { return Element::basis(i) - Element::basis(0); };
  IntMatrix rows;
  for (long i = -window; i <= window; ++i) {
    if (i == 0) continue;
    for (long j = -window; j <= window; ++j) {
      if (j == 0) continue;
      const Element p = multiply(E(i), E(j));
      IntVector v(d, 0);
      for (const auto& [k, c] : p.terms())
        if (sgn(k) != 0) v[slot(k.get_si())] = c;
      rows.push_back(std::move(v));
    }
  }
  r.products = rows.size();
  const Lattice l = hnf(rows, d);
  r.lattice_rank = l.rank();
  IntVector e1(d, 0);
  e1[slot(1)] = 1;
  r.e1_in_span = l.contains(e1);
  return r;
}

}  // namespace qr::corez
