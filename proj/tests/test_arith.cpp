#include "doctest.h"

#include <numeric>

#include "a1deg/arith.hpp"
#include "a1deg/error.hpp"
#include "a1deg/modp.hpp"
#include "support.hpp"

using namespace a1deg;

namespace {

Integer product(const std::vector<Integer>& v) {
  Integer p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

// Solubility of a x^2 + b y^2 = z^2 in primitive integers modulo p^k,
// by exhaustive search. For k large enough this decides the Hilbert symbol.
bool conic_soluble_mod(long a, long b, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  auto md = [m](long v) { return ((v % m) + m) % m; };
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (md(a * x * x + b * y * y - z * z) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("squarefree parts") {
  CHECK(squarefree_part(Rational(8)) == 2);
  CHECK(squarefree_part(Rational(-729)) == -1);
  CHECK(squarefree_part(Rational(9, 2)) == 2);
  CHECK(squarefree_part(Rational(-50, 3)) == -6);
  CHECK(squarefree_part(Rational(1)) == 1);
  CHECK_THROWS_AS(squarefree_part(Rational(0)), DomainError);
}

TEST_CASE("integer factorization") {
  CHECK(factor_integer(12) == std::vector<Integer>{2, 2, 3});
  CHECK(factor_integer(4096) == std::vector<Integer>(12, Integer(2)));
  std::vector<Integer> f = factor_integer(7641728);
  CHECK(product(f) == 7641728);
  for (const auto& p : f) CHECK(is_prime(p));
  CHECK(factor_integer(-30) == std::vector<Integer>{2, 3, 5});
  CHECK(factor_integer(1).empty());
  CHECK_THROWS_AS(factor_integer(0), DomainError);

  // Semiprime with two factors above the trial-division limit.
  Integer big = Integer("1000003") * Integer("1000033");
  CHECK(factor_integer(big) == std::vector<Integer>{Integer("1000003"), Integer("1000033")});
  CHECK(prime_divisors(720) == std::vector<Integer>{2, 3, 5});
}

TEST_CASE("factorization multiplies back") {
  auto g = test::rng(1);
  for (int i = 0; i < 200; ++i) {
    Integer n = Integer(test::uniform(g, 2, 1L << 40));
    std::vector<Integer> f = factor_integer(n);
    CHECK(product(f) == n);
    CHECK(std::is_sorted(f.begin(), f.end()));
    for (const auto& p : f) CHECK(is_prime(p));
  }
}

TEST_CASE("valuations") {
  CHECK(valuation(Rational(48), 2) == 4);
  CHECK(valuation(Rational(5, 24), 2) == -3);
  CHECK(valuation(Rational(7), 3) == 0);
  CHECK_THROWS_AS(valuation(Rational(0), 2), DomainError);
}

TEST_CASE("legendre symbols and nonresidues") {
  CHECK(legendre_symbol(-1, 5) == 1);
  CHECK(legendre_symbol(-1, 7) == -1);
  CHECK(legendre_symbol(3, 11) == 1);
  CHECK(legendre_symbol(22, 11) == 0);
  CHECK_THROWS_AS(legendre_symbol(3, 2), DomainError);
  CHECK_THROWS_AS(legendre_symbol(3, 15), DomainError);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(23) == 5);
  CHECK(least_nonresidue(3) == 2);
}

TEST_CASE("p-adic squares") {
  CHECK(is_square_in_qp(Rational(17), 2));
  CHECK_FALSE(is_square_in_qp(Rational(5), 2));
  CHECK(is_square_in_qp(Rational(4, 9), 3));
  CHECK_FALSE(is_square_in_qp(Rational(3), 3));
  CHECK(is_square_in_qp(Rational(-1), 5));
  CHECK_FALSE(is_square_in_qp(Rational(-1), 7));
}

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
  CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
  CHECK(hilbert_symbol(3, 5, Place::prime(5)) == -1);
  CHECK(hilbert_symbol(-1, 5, Place::prime(5)) == 1);
  for (long b : {-7L, 2L, 3L, 10L}) {
    for (long p : {2L, 3L, 5L, 7L}) CHECK(hilbert_symbol(1, Rational(b), Place::prime(p)) == 1);
  }
  CHECK_THROWS_AS(Place::prime(4), DomainError);
  CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::prime(3)), DomainError);
}

TEST_CASE("hilbert symbol agrees with brute-force conic solubility") {
  // For squarefree a, b primitive solutions mod p^2 (odd p) or 2^5 decide solubility.
  const std::vector<long> units = {-15, -10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 15};
  for (long p : {2L, 3L, 5L}) {
    int k = p == 2 ? 5 : 2;
    for (long a : units) {
      for (long b : units) {
        bool soluble = conic_soluble_mod(a, b, p, k);
        int h = hilbert_symbol(Rational(a), Rational(b), Place::prime(p));
        CHECK_MESSAGE((h == 1) == soluble, "a=" << a << " b=" << b << " p=" << p);
      }
    }
  }
}

TEST_CASE("hilbert symbol properties") {
  auto g = test::rng(2);
  for (int i = 0; i < 200; ++i) {
    Rational a = test::random_nonzero_rational(g, 60, 12), b = test::random_nonzero_rational(g, 60, 12);
    Rational c = test::random_nonzero_rational(g, 60, 12);
    Integer n = abs(a.get_num()) * a.get_den() * abs(b.get_num()) * b.get_den() * 2;
    int prod = hilbert_symbol(a, b, Place::infinity());
    for (const auto& p : prime_divisors(n)) prod *= hilbert_symbol(a, b, Place::prime(p));
    CHECK(prod == 1);
    for (Integer p : {Integer(2), Integer(3), Integer(7)}) {
      Place v = Place::prime(p);
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, Rational(b * c), v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      CHECK(hilbert_symbol(a, Rational(-a), v) == 1);
      if (a != 1) CHECK(hilbert_symbol(a, Rational(1 - a), v) == 1);
      CHECK(hilbert_symbol(a, Rational(b * c * c), v) == hilbert_symbol(a, b, v));
    }
  }
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("-12/8") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("arithmetic mod p") {
  ModP a(5, 7), b(-3, 7);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(ModP::from_rational(Rational(1, 2), 7).value() == 4);
  CHECK_THROWS_AS(ModP::from_rational(Rational(1, 7), 7), DomainError);
  CHECK_THROWS_AS(ModP(0, 7).inverse(), DomainError);
  CHECK_THROWS_AS(require_odd_prime_modulus(9), DomainError);
  CHECK_THROWS_AS(require_odd_prime_modulus(2), DomainError);
  CHECK_NOTHROW(require_odd_prime_modulus(101));
}
