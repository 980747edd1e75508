#include <set>
#include <vector>

#include "qr/corez.hpp"
#include "qr/errors.hpp"

namespace qr::corez {

Dyadic::Dyadic(Integer numerator, unsigned long exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  const unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned long drop = twos < exp_ ? twos : exp_;
  if (drop > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), drop);
    exp_ -= drop;
  }
}

bool Dyadic::is_normalized() const { return exp_ == 0 || mpz_odd_p(num_.get_mpz_t()); }

mpq_class Dyadic::value() const {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
  mpq_class q(num_, den);
  q.canonicalize();
  return q;
}

namespace {

Integer shifted(const Integer& v, unsigned long bits) {
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), bits);
  return out;
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  return Dyadic(shifted(a.num_, e - a.exp_) + shifted(b.num_, e - b.exp_), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + Dyadic(-b.num_, b.exp_); }

Dyadic Dyadic::twice() const { return exp_ > 0 ? Dyadic(num_, exp_ - 1) : Dyadic(shifted(num_, 1), 0); }

bool operator<(const Dyadic& a, const Dyadic& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  return shifted(a.num_, e - a.exp_) < shifted(b.num_, e - b.exp_);
}

std::string to_string(const Dyadic& d) {
  if (d.exponent() == 0) return d.numerator().get_str();
  return d.numerator().get_str() + "/2^" + std::to_string(d.exponent());
}

Dyadic mid(const Dyadic& a, const Dyadic& b) { return (a + b).half(); }

Dyadic reflect(const Dyadic& a, const Dyadic& b) { return a.twice() - b; }

DyadicProbe dyadic_probe(int depth, const SizeCaps& caps) {
  if (depth < 0) throw Error(Errc::invalid_param, "depth must be nonnegative");
  if (depth > 12) throw Error(Errc::depth_limit, "dyadic closure depth is limited to 12");
  DyadicProbe r;
  r.depth = depth;
  std::set<Dyadic> current{Dyadic::from_int(0), Dyadic::from_int(1)};
  r.sizes.push_back(current.size());
  for (int d = 1; d <= depth; ++d) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(current.size()) * current.size();
    if (pairs > caps.closure)
      throw Error(Errc::size_limit, "dyadic round " + std::to_string(d) + " needs " + std::to_string(pairs) + " pairs");
    const std::vector<Dyadic> items(current.begin(), current.end());
    std::set<Dyadic> next = current;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Dyadic& a = items[i];
      if (mid(a, a) != a || reflect(a, a) != a) r.idempotent = false;
      for (std::size_t j = 0; j < items.size(); ++j) {
        const Dyadic& b = items[j];
        const Dyadic m = mid(a, b);
        if (j > i && m != mid(b, a)) r.commutative = false;
        const Dyadic f = reflect(a, b);
        if (!m.is_normalized() || !f.is_normalized()) r.all_normalized = false;
        next.insert(m);
        next.insert(f);
      }
    }
    current = std::move(next);
    r.sizes.push_back(current.size());
  }
  return r;
}

}  // namespace qr::corez
