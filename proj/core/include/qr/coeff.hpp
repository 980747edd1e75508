#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "qr/errors.hpp"

namespace qr {

using Rational = mpq_class;

__extension__ typedef unsigned __int128 UInt128;
__extension__ typedef __int128 Int128;

// Element of the prime field Z_p. A default-constructed value has p = 0 and
// only serves as a placeholder.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint64_t p) : p_(p) {
    if (p < 2) throw Error(Errc::invalid_param, "prime field modulus must be >= 2");
    const auto m = static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(((value % m) + m) % m);
  }

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  ModP inverse() const {
    if (v_ == 0) throw Error(Errc::invalid_param, "zero has no inverse in Z_p");
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = static_cast<std::uint64_t>((static_cast<UInt128>(result) * base) % p_);
      base = static_cast<std::uint64_t>((static_cast<UInt128>(base) * base) % p_);
      e >>= 1;
    }
    return {Raw{}, p_, result};
  }

  friend ModP operator+(const ModP& a, const ModP& b) { return {Raw{}, check(a, b), (a.v_ + b.v_) % a.p_}; }
  friend ModP operator-(const ModP& a, const ModP& b) { return {Raw{}, check(a, b), (a.v_ + a.p_ - b.v_) % a.p_}; }
  friend ModP operator*(const ModP& a, const ModP& b) {
    const std::uint64_t p = check(a, b);
    return {Raw{}, p, static_cast<std::uint64_t>((static_cast<UInt128>(a.v_) * b.v_) % p)};
  }
  friend ModP operator-(const ModP& a) { return {Raw{}, a.p_, (a.p_ - a.v_) % a.p_}; }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& out, const ModP& a) { return out << a.v_; }

 private:
  struct Raw {};
  ModP(Raw, std::uint64_t p, std::uint64_t v) : v_(v), p_(p) {}

  static std::uint64_t check(const ModP& a, const ModP& b) {
    if (a.p_ != b.p_) throw Error(Errc::domain_mismatch, "prime field moduli differ");
    return a.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

enum class CoeffDomain { integers, rationals, prime_field };

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<mpz_class> {
  static constexpr CoeffDomain domain = CoeffDomain::integers;
  static bool is_zero(const mpz_class& c) { return sgn(c) == 0; }
  static mpz_class zero_like(const mpz_class&) { return 0; }
  static mpz_class from_int(std::int64_t v, const mpz_class&) { return mpz_class(static_cast<long>(v)); }
  static bool same_domain(const mpz_class&, const mpz_class&) { return true; }
  static std::string str(const mpz_class& c) { return c.get_str(); }
};

template <>
struct CoeffTraits<mpq_class> {
  static constexpr CoeffDomain domain = CoeffDomain::rationals;
  static bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
  static mpq_class zero_like(const mpq_class&) { return 0; }
  static mpq_class from_int(std::int64_t v, const mpq_class&) { return mpq_class(static_cast<long>(v)); }
  static bool same_domain(const mpq_class&, const mpq_class&) { return true; }
  static std::string str(const mpq_class& c) { return c.get_str(); }
};

template <>
struct CoeffTraits<ModP> {
  static constexpr CoeffDomain domain = CoeffDomain::prime_field;
  static bool is_zero(const ModP& c) { return c.is_zero(); }
  static ModP zero_like(const ModP& like) { return ModP(0, like.modulus()); }
  static ModP from_int(std::int64_t v, const ModP& like) { return ModP(v, like.modulus()); }
  static bool same_domain(const ModP& a, const ModP& b) { return a.modulus() == b.modulus(); }
  static std::string str(const ModP& c) { return std::to_string(c.value()); }
};

}  // namespace qr
