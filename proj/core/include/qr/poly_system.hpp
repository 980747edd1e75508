#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qr/lattice.hpp"
#include "qr/quandle.hpp"
#include "qr/ring.hpp"
#include "qr/size_caps.hpp"

namespace qr {

// Monomial of degree <= 2 in 0-based variables: i = j = -1 is the constant,
// j = -1 a linear term x_i, otherwise x_i x_j with i <= j.
struct Monomial {
  int i = -1;
  int j = -1;

  static Monomial constant() { return {}; }
  static Monomial linear(int v) { return {v, -1}; }
  static Monomial quadratic(int a, int b) { return a <= b ? Monomial{a, b} : Monomial{b, a}; }

  int degree() const noexcept { return (i >= 0) + (j >= 0); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Ordered by degree, then by indices.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Polynomial {
 public:
  void add(const Monomial& m, const Integer& c);
  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  // Product of two polynomials of degree <= 1.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Integer& s) const;

  // Sign fixed so the largest monomial has a positive coefficient.
  Polynomial normalized() const;
  Integer evaluate(std::span<const Integer> x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Integer> terms_;
};

// Variables print as <prefix>1 .. <prefix>n.
std::string to_string(const Polynomial& p, std::string_view prefix = "x");

// Parses "lhs = rhs" (or a bare polynomial, read as "= 0") into lhs - rhs.
// Terms look like 3, -x2, 2*x1*x3, x4^2; variables are 1-based. Throws
// ParseError on malformed input or a variable index above num_vars.
Polynomial parse_equation(std::string_view text, std::size_t num_vars, std::string_view prefix = "x");

struct PolySystem {
  std::size_t num_vars = 0;
  std::vector<Polynomial> equations;  // each equation reads p = 0
  int aug_value = 0;
};

// Coefficient equations of u^2 = u for u = aug*e_0 + sum x_i E_i; equation k
// (k = 1..n-1) compares the coefficients of e_k.
PolySystem build_system(const Quandle& q, int aug_value);

// True when the systems agree equation by equation up to the sign of each.
bool equivalent_up_to_sign(const PolySystem& a, const PolySystem& b);

// Integer solutions with every variable in [-box, box], sorted.
std::vector<DeltaVector> search_system(const PolySystem& s, long box, const SizeCaps& caps = SizeCaps::defaults(),
                                       unsigned jobs = 1);

}  // namespace qr
