#pragma once

#include <string>

#include "a1deg/gw.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/unipoly.hpp"

namespace a1deg {

/// A finite morphism F/G : P^1 -> P^1 with gcd(F, G) = 1.
class RationalMap {
 public:
  /// Throws DomainError on a common factor or a constant map. When G is
  /// nonconstant both F and G are scaled so that G is monic.
  RationalMap(QPoly f, QPoly g);

  /// Parse "F/G" (or just "F", meaning F/1) in the variable occurring in it.
  static RationalMap parse(const std::string& text);

  const QPoly& numerator() const { return f_; }
  const QPoly& denominator() const { return g_; }
  int degree() const { return std::max(f_.degree(), g_.degree()); }
  const std::string& var() const { return f_.var(); }
  std::string to_string() const;

  bool operator==(const RationalMap& o) const { return f_ == o.f_ && g_ == o.g_; }

 private:
  QPoly f_, g_;
};

/// b with F(x)G(y) - F(y)G(x) = (x - y) * sum b[i][j] x^i y^j, n x n where
/// n is the degree of the map.
SymmetricForm<Rational> bezout_matrix(const RationalMap& m);

GWClass global_a1_degree(const RationalMap& m);

/// <c> + ((n-1)/2)(<1> + <-1>) for odd n, (n/2)(<1> + <-1>) for even n.
GWClass monomial_degree_closed_form(int n, const Rational& c);

/// F(w)/G(w) as a coprime map, for w of degree 1 (including t -> c/t).
RationalMap compose_with_fractional_linear(const RationalMap& m, const RationalMap& w);

}  // namespace a1deg
