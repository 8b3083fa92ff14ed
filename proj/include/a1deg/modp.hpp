#pragma once

#include <cstdint>
#include <string>

#include "a1deg/arith.hpp"

namespace a1deg {

/// Element of the prime field F_p for an odd prime p < 2^62.
class ModP {
 public:
  ModP(std::int64_t value, std::int64_t modulus);
  /// Reduction of a rational whose denominator is prime to p.
  static ModP from_rational(const Rational& q, std::int64_t modulus);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  ModP operator+(const ModP& o) const;
  ModP operator-(const ModP& o) const;
  ModP operator*(const ModP& o) const;
  ModP operator/(const ModP& o) const;
  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_, Unchecked{}); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }
  bool operator==(const ModP& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const ModP& o) const { return !(*this == o); }

  ModP inverse() const;
  ModP pow(std::uint64_t e) const;

 private:
  struct Unchecked {};
  ModP(std::int64_t v, std::int64_t p, Unchecked) : v_(v), p_(p) {}
  void check_same(const ModP& o) const;

  std::int64_t v_;
  std::int64_t p_;
};

/// Throws DomainError unless p is an odd prime small enough for ModP.
void require_odd_prime_modulus(std::int64_t p);

inline bool is_zero(const ModP& x) { return x.value() == 0; }
inline ModP zero_like(const ModP& x) { return ModP(0, x.modulus()); }
inline ModP one_like(const ModP& x) { return ModP(1, x.modulus()); }
inline ModP from_int(const ModP& x, long n) { return ModP(n, x.modulus()); }
inline ModP from_rational(const ModP& x, const Rational& q) {
  return ModP::from_rational(q, x.modulus());
}
inline ModP inverse(const ModP& x) { return x.inverse(); }
std::string to_string(const ModP& x);

}  // namespace a1deg
