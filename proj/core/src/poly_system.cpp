#include "qr/poly_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qr/errors.hpp"
#include "qr/parallel.hpp"

namespace qr {

void Polynomial::add(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

int Polynomial::degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.degree() + b.degree() > 2) throw Error(Errc::invalid_param, "product would exceed degree 2");
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      if (ma.degree() == 0) m = mb;
      else if (mb.degree() == 0) m = ma;
      else m = Monomial::quadratic(ma.i, mb.i);
      out.add(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Integer& s) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add(m, c * s);
  return out;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty() || sgn(terms_.rbegin()->second) > 0) return *this;
  return scaled(Integer(-1));
}

Integer Polynomial::evaluate(std::span<const Integer> x) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer t = c;
    if (m.i >= 0) t *= x[static_cast<std::size_t>(m.i)];
    if (m.j >= 0) t *= x[static_cast<std::size_t>(m.j)];
    total += t;
  }
  return total;
}

std::string to_string(const Polynomial& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const Integer mag = abs(c);
    out << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (m.degree() == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      if (m.degree() == 2 && m.i == m.j) {
        out << prefix << (m.i + 1) << "^2";
      } else {
        out << prefix << (m.i + 1);
        if (m.j >= 0) out << '*' << prefix << (m.j + 1);
      }
    }
    first = false;
  }
  return out.str();
}

namespace {

class EquationParser {
 public:
  EquationParser(std::string_view text, std::size_t num_vars, std::string_view prefix)
      : s_(text), n_(num_vars), prefix_(prefix) {}

  Polynomial parse() {
    Polynomial lhs = side();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '=') {
      ++pos_;
      lhs -= side();
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial side() {
    Polynomial p;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      p += term().scaled(Integer(sign));
      first = false;
    }
    if (first) fail("expected a term");
    return p;
  }

  Polynomial term() {
    Polynomial t;
    t.add(Monomial::constant(), Integer(1));
    t = t * factor();
    while (peek('*')) {
      ++pos_;
      t = t * factor();
    }
    return t;
  }

  Polynomial factor() {
    skip();
    Polynomial f;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      f.add(Monomial::constant(), Integer(std::string(s_.substr(start, pos_ - start))));
      return f;
    }
    if (s_.substr(pos_, prefix_.size()) != prefix_) fail("expected a number or variable");
    pos_ += prefix_.size();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("variable without index");
    const unsigned long index = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (index < 1 || index > n_) fail("variable index out of range");
    const int v = static_cast<int>(index - 1);
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '1' && s_[pos_] != '2')) fail("exponent must be 1 or 2");
      const bool square = s_[pos_++] == '2';
      f.add(square ? Monomial::quadratic(v, v) : Monomial::linear(v), Integer(1));
      return f;
    }
    f.add(Monomial::linear(v), Integer(1));
    return f;
  }

  std::string_view s_;
  std::size_t n_;
  std::string_view prefix_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_equation(std::string_view text, std::size_t num_vars, std::string_view prefix) {
  return EquationParser(text, num_vars, prefix).parse();
}

PolySystem build_system(const Quandle& q, int aug_value) {
  if (aug_value != 0 && aug_value != 1) throw Error(Errc::invalid_param, "augmentation value must be 0 or 1");
  const std::size_t n = q.size();
  PolySystem s;
  s.num_vars = n - 1;
  s.aug_value = aug_value;
  // e-coordinates of u as linear polynomials.
  std::vector<Polynomial> c(n);
  c[0].add(Monomial::constant(), Integer(aug_value));
  for (std::size_t i = 1; i < n; ++i) {
    c[i].add(Monomial::linear(static_cast<int>(i - 1)), Integer(1));
    c[0].add(Monomial::linear(static_cast<int>(i - 1)), Integer(-1));
  }
  std::vector<Polynomial> sq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      sq[static_cast<std::size_t>(q.op(static_cast<Elem>(a), static_cast<Elem>(b)))] += c[a] * c[b];
  for (std::size_t k = 1; k < n; ++k) s.equations.push_back(sq[k] - c[k]);
  return s;
}

bool equivalent_up_to_sign(const PolySystem& a, const PolySystem& b) {
  if (a.num_vars != b.num_vars || a.equations.size() != b.equations.size()) return false;
  for (std::size_t k = 0; k < a.equations.size(); ++k)
    if (a.equations[k].normalized() != b.equations[k].normalized()) return false;
  return true;
}

std::vector<DeltaVector> search_system(const PolySystem& s, long box, const SizeCaps& caps, unsigned jobs) {
  if (box < 0) throw Error(Errc::invalid_param, "box must be nonnegative");
  const auto side = static_cast<std::uint64_t>(2 * box + 1);
  if (checked_pow(side, s.num_vars) > caps.points)
    throw Error(Errc::size_limit,
                "box of " + std::to_string(side) + "^" + std::to_string(s.num_vars) + " points exceeds cap");

  // Flattened int64 coefficients; products are evaluated in 128 bits.
  struct Term {
    int i, j;
    std::int64_t c;
  };
  std::vector<std::vector<Term>> eqs;
  for (const auto& p : s.equations) {
    std::vector<Term> terms;
    for (const auto& [m, c] : p.terms()) {
      if (!c.fits_slong_p()) throw Error(Errc::size_limit, "coefficient too large for the sweep");
      terms.push_back({m.i, m.j, c.get_si()});
    }
    eqs.push_back(std::move(terms));
  }
  if (static_cast<double>(box) > 1e12) throw Error(Errc::size_limit, "box too large for the sweep");

  const std::size_t dim = s.num_vars;
  const std::size_t slices = dim > 0 ? static_cast<std::size_t>(side) : 1;
  auto parts = parallel_map(slices, jobs, [&](std::size_t slice) {
    std::vector<DeltaVector> found;
    std::vector<std::int64_t> x(dim, -box);
    if (dim > 0) x[0] = static_cast<std::int64_t>(slice) - box;
    while (true) {
      bool ok = true;
      for (const auto& terms : eqs) {
        Int128 total = 0;
        for (const Term& t : terms) {
          Int128 v = t.c;
          if (t.i >= 0) v *= x[static_cast<std::size_t>(t.i)];
          if (t.j >= 0) v *= x[static_cast<std::size_t>(t.j)];
          total += v;
        }
        if (total != 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        DeltaVector v;
        for (const std::int64_t c : x) v.coords.emplace_back(static_cast<long>(c));
        found.push_back(std::move(v));
      }
      std::size_t i = dim;
      while (i > 1 && x[i - 1] == box) x[--i] = -box;
      if (i <= 1) break;
      ++x[i - 1];
    }
    return found;
  });
  std::vector<DeltaVector> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qr
