#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace a1deg {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(const Integer& n);

/// Prime factors of |n| with multiplicity, ascending. Trial division up to
/// 10^6, then Brent's variant of Pollard rho on the cofactor.
std::vector<Integer> factor_integer(const Integer& n);

/// Distinct prime divisors of |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// The signed squarefree integer s with x / s a rational square.
Integer squarefree_part(const Rational& x);

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& x, const Integer& p);

/// Legendre symbol (a / p) for an odd prime p.
int legendre_symbol(const Integer& a, const Integer& p);

/// Least positive quadratic nonresidue modulo an odd prime.
Integer least_nonresidue(const Integer& p);

/// True iff the nonzero rational x is a square in Q_p.
bool is_square_in_qp(const Rational& x, const Integer& p);

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place infinity() { return Place(Integer(0)); }
  static Place prime(const Integer& p);

  bool is_infinite() const { return p_ == 0; }
  const Integer& prime() const { return p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;
};

/// Hilbert symbol (a, b)_v in {-1, 1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

int sign_of(const Rational& x);

Rational parse_rational(const std::string& text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Scalar interface shared with ModP and NFElement, used by the generic
// polynomial and matrix code.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int(const Rational&, long n) { return Rational(n); }
inline Rational from_rational(const Rational&, const Rational& q) { return q; }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }

}  // namespace a1deg
