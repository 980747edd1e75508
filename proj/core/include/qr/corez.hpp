#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qr/lattice.hpp"
#include "qr/size_caps.hpp"

namespace qr::corez {

// Element of Z[Core(Z)], e_i e_j = e_{2j-i}: a finite sparse map from
// exponents to nonzero coefficients.
class Element {
 public:
  Element() = default;
  static Element basis(const Integer& i, const Integer& c = 1);

  const std::map<Integer, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  Integer coeff(const Integer& i) const;

  void add_term(const Integer& i, const Integer& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const Integer& s) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Integer, Integer> terms_;
};

Element multiply(const Element& u, const Element& v);
inline Element operator*(const Element& u, const Element& v) { return multiply(u, v); }
Element commutator(const Element& u, const Element& v);
std::string to_string(const Element& u);

struct Term {
  Integer index;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Extrema {
  Term min;
  Term max;
};

// Throws ZeroElement for u = 0.
Extrema extrema(const Element& u);

struct IdempotenceCertificate {
  bool idempotent = false;
  // Support size >= 2: the chain min(u^2) < min(u) <= max(u) < max(u^2).
  std::optional<Extrema> u;
  std::optional<Extrema> square;
  std::string reason;
};

IdempotenceCertificate is_idempotent(const Element& u);

// [e_{a/3}, e_{2a/3}] = e_a - e_0; throws NotDivisibleBy3 unless 3 | a.
bool commutator_identity(const Integer& a);

struct OrderProbe {
  long window = 0;
  std::uint64_t checks = 0;
  std::uint64_t left_failures = 0;   // 2i-k < 2j-k violated
  std::uint64_t right_failures = 0;  // 2k-i > 2k-j violated

  bool passed() const noexcept { return left_failures == 0 && right_failures == 0; }
};

// All i < j and k in [-window, window]; window >= 1.
OrderProbe order_probe(long window);

struct RandomSweep {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::size_t> failing_samples;
};

inline constexpr std::uint64_t default_seed = 20240531;

// Element for sample `index`: support size in [2, 6], exponents in
// [-20, 20], coefficients in [-9, 9] \ {0}. Depends only on (seed, index).
Element random_element(std::uint64_t seed, std::size_t index);

// Checks u^2 != u and the extremal chain with its coefficients for every sample.
RandomSweep extremal_sweep(std::size_t samples, std::uint64_t seed = default_seed, unsigned jobs = 1);

// Window evidence for "E_1 in Delta^2": is E_1 in the span of the products
// E_i E_j with 0 < |i|, |j| <= window? Reports without a verdict on Delta^2.
struct WindowProbe {
  long window = 0;
  std::size_t products = 0;
  std::size_t lattice_rank = 0;
  bool e1_in_span = false;
};

WindowProbe delta2_window_probe(long window);

// Dyadic rationals m / 2^k in lowest terms (m odd or k = 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Integer numerator, unsigned long exponent);
  static Dyadic from_int(long v) { return Dyadic(Integer(v), 0); }

  const Integer& numerator() const noexcept { return num_; }
  unsigned long exponent() const noexcept { return exp_; }
  bool is_normalized() const;
  mpq_class value() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  Dyadic half() const { return Dyadic(num_, exp_ + 1); }
  Dyadic twice() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend bool operator<(const Dyadic& a, const Dyadic& b);

 private:
  Integer num_ = 0;
  unsigned long exp_ = 0;
};

std::string to_string(const Dyadic& d);

Dyadic mid(const Dyadic& a, const Dyadic& b);      // a * b = (a + b) / 2
Dyadic reflect(const Dyadic& a, const Dyadic& b);  // a *bar b = 2a - b

struct DyadicProbe {
  int depth = 0;
  std::vector<std::size_t> sizes;  // sizes[d] = closure size after d rounds
  bool all_normalized = true;
  bool commutative = true;
  bool idempotent = true;
};

// Closes {0, 1} under mid and reflect for `depth` rounds. DepthLimit above
// 12; SizeLimit once a round would pair more elements than caps.points / 10.
DyadicProbe dyadic_probe(int depth, const SizeCaps& caps = SizeCaps::defaults());

}  // namespace qr::corez
