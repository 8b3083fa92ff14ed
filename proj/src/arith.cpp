#include "a1deg/arith.hpp"

#include <algorithm>

#include "a1deg/error.hpp"

namespace a1deg {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Brent's cycle finding with batched gcds. Returns a nontrivial factor of
// the odd composite n.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  Integer c = seed;
  for (;; c += 1) {
    Integer y = 2, x, ys, g = 1, q = 1, t;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          t = x - y;
          q = q * abs(t);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        t = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_cofactor(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n, 1);
  factor_cofactor(d, out);
  factor_cofactor(Integer(n / d), out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<Integer> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("factor_integer: zero has no factorization");
  Integer m = abs(n);
  std::vector<Integer> out;
  while (mpz_even_p(m.get_mpz_t())) {
    out.push_back(2);
    m /= 2;
  }
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  factor_cofactor(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> f = factor_integer(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Integer squarefree_part(const Rational& x) {
  if (sgn(x) == 0) throw DomainError("squarefree_part: not a unit");
  Integer result = sgn(x) < 0 ? -1 : 1;
  for (const Integer* part : {&x.get_num(), &x.get_den()}) {
    std::vector<Integer> f = factor_integer(*part);
    for (std::size_t i = 0; i < f.size();) {
      std::size_t j = i;
      while (j < f.size() && f[j] == f[i]) ++j;
      if ((j - i) % 2 == 1) result *= f[i];
      i = j;
    }
  }
  return result;
}

int valuation(const Rational& x, const Integer& p) {
  if (sgn(x) == 0) throw DomainError("valuation: zero argument");
  Integer tmp;
  int v = static_cast<int>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  v -= static_cast<int>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return v;
}

int legendre_symbol(const Integer& a, const Integer& p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("legendre_symbol: modulus " + p.get_str() + " is not an odd prime");
  }
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer least_nonresidue(const Integer& p) {
  for (Integer a = 2;; ++a) {
    if (legendre_symbol(a, p) == -1) return a;
  }
}

bool is_square_in_qp(const Rational& x, const Integer& p) {
  int v = valuation(x, p);
  if (v % 2 != 0) return false;
  Integer num = x.get_num(), den = x.get_den();
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer u = num * den;
  if (p == 2) {
    Integer r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  return legendre_symbol(u, p) == 1;
}

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw DomainError("Place: " + p.get_str() + " is not prime");
  return Place(p);
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("hilbert_symbol: zero argument");
  if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = v.prime();
  // a = p^alpha * u with u a p-adic unit; only parities and u matter.
  auto split = [&p](const Rational& x, int& parity, Integer& unit) {
    Integer num = x.get_num(), den = x.get_den();
    long e = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    e -= static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    parity = static_cast<int>(((e % 2) + 2) % 2);
    unit = num * den;
  };
  int alpha = 0, beta = 0;
  Integer u, w;
  split(a, alpha, u);
  split(b, beta, w);
  if (p == 2) {
    auto mod8 = [](const Integer& z) {
      Integer r = z % 8;
      if (r < 0) r += 8;
      return static_cast<int>(r.get_si());
    };
    int u8 = mod8(u), w8 = mod8(w);
    int eps_u = ((u8 - 1) / 2) % 2, eps_w = ((w8 - 1) / 2) % 2;
    int om_u = ((u8 * u8 - 1) / 8) % 2, om_w = ((w8 * w8 - 1) / 8) % 2;
    int e = eps_u * eps_w + alpha * om_w + beta * om_u;
    return e % 2 == 0 ? 1 : -1;
  }
  int result = 1;
  if (alpha && beta) {
    Integer half = (p - 1) / 2;
    if (mpz_odd_p(half.get_mpz_t())) result = -result;
  }
  if (beta) result *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha) result *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
  return result;
}

int sign_of(const Rational& x) { return sgn(x); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal '" + text + "'", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace a1deg
