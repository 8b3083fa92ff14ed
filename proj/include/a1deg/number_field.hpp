#pragma once

#include <memory>
#include <string>
#include <vector>

#include "a1deg/unipoly.hpp"

namespace a1deg {

/// L = Q[theta]/(m) for a monic irreducible m over Q.
class NumberField {
 public:
  /// Throws DomainError unless m is monic (after scaling) and irreducible.
  static std::shared_ptr<const NumberField> make(const QPoly& m, std::string generator = "a");

  int degree() const { return minpoly_.degree(); }
  const QPoly& minpoly() const { return minpoly_; }
  const std::string& generator() const { return generator_; }

  /// Tr(theta^k) for 0 <= k < degree.
  const Rational& trace_of_power(int k) const { return power_traces_.at(static_cast<std::size_t>(k)); }

 private:
  NumberField(QPoly m, std::string generator);

  QPoly minpoly_;
  std::string generator_;
  std::vector<Rational> power_traces_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, represented by a polynomial of degree < [L:Q].
class NFElement {
 public:
  NFElement(FieldPtr field, const QPoly& rep);
  NFElement(FieldPtr field, const Rational& q);

  static NFElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }

  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator/(const NFElement& o) const { return *this * o.inverse(); }
  NFElement operator-() const { return NFElement(field_, -rep_); }
  NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
  NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
  NFElement& operator*=(const NFElement& o) { return *this = *this * o; }
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }

  NFElement inverse() const;
  /// theta * this, cheaper than a general product.
  NFElement times_generator() const;

 private:
  void check_same(const NFElement& o) const;

  FieldPtr field_;
  QPoly rep_;
};

/// Trace of multiplication by alpha on L as a Q-vector space.
Rational trace_of_element(const NFElement& alpha);

inline bool is_zero(const NFElement& x) { return x.rep().is_zero(); }
inline NFElement zero_like(const NFElement& x) { return NFElement(x.field(), Rational(0)); }
inline NFElement one_like(const NFElement& x) { return NFElement(x.field(), Rational(1)); }
inline NFElement from_int(const NFElement& x, long n) { return NFElement(x.field(), Rational(n)); }
inline NFElement from_rational(const NFElement& x, const Rational& q) { return NFElement(x.field(), q); }
inline NFElement inverse(const NFElement& x) { return x.inverse(); }
std::string to_string(const NFElement& x);

using NFPoly = UniPoly<NFElement>;

/// Result of moving a root of g to the origin.
struct ShiftedRoot {
  FieldPtr field;
  NFPoly shifted;    // f(x + theta) over L = Q[theta]/(g)
  int multiplicity;  // largest e with x^e | shifted
};

/// Re-centre f at the root theta of the irreducible factor g of f.
ShiftedRoot shift_to_root(const QPoly& f, const QPoly& g);

/// Re-centre f at the root of g in an already constructed field L = Q[theta]/(g).
NFPoly shift_into(const QPoly& f, const FieldPtr& field);

}  // namespace a1deg
