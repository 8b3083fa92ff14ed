#include "a1deg/modp.hpp"

#include "a1deg/error.hpp"

namespace a1deg {

void require_odd_prime_modulus(std::int64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (p < 3 || p >= (std::int64_t{1} << 62) || !is_prime(Integer(static_cast<long>(p)))) {
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime");
  }
}

ModP::ModP(std::int64_t value, std::int64_t modulus) : p_(modulus) {
  std::int64_t r = value % modulus;
  v_ = r < 0 ? r + modulus : r;
}

ModP ModP::from_rational(const Rational& q, std::int64_t modulus) {
  Integer p = static_cast<long>(modulus);
  Integer n = q.get_num() % p, d = q.get_den() % p;
  if (d == 0) throw DomainError("denominator of " + q.get_str() + " vanishes mod " + p.get_str());
  Integer inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  Integer r = (n * inv) % p;
  return ModP(r.get_si(), modulus);
}

void ModP::check_same(const ModP& o) const {
  if (p_ != o.p_) throw DomainError("ModP: mismatched moduli");
}

ModP ModP::operator+(const ModP& o) const {
  check_same(o);
  std::int64_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return ModP(s, p_, Unchecked{});
}

ModP ModP::operator-(const ModP& o) const {
  check_same(o);
  std::int64_t s = v_ - o.v_;
  if (s < 0) s += p_;
  return ModP(s, p_, Unchecked{});
}

ModP ModP::operator*(const ModP& o) const {
  check_same(o);
  auto prod = static_cast<__int128>(v_) * o.v_;
  return ModP(static_cast<std::int64_t>(prod % p_), p_, Unchecked{});
}

ModP ModP::operator/(const ModP& o) const { return *this * o.inverse(); }

ModP ModP::pow(std::uint64_t e) const {
  ModP result(1 % p_, p_, Unchecked{}), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DomainError("ModP: division by zero");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b) {
    std::int64_t q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

std::string to_string(const ModP& x) { return std::to_string(x.value()); }

}  // namespace a1deg
