#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a1deg/arith.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/modp.hpp"
#include "a1deg/number_field.hpp"

namespace a1deg {

/// Q, or F_p for an odd prime p.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  static BaseField prime_field(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }
  std::string to_string() const;
  bool operator==(const BaseField& o) const { return p_ == o.p_; }
  bool operator!=(const BaseField& o) const { return p_ != o.p_; }

  /// Parse "Q" or "Fp:<p>".
  static BaseField parse(const std::string& text);

 private:
  explicit BaseField(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// Class in GW(k) of a nondegenerate form, stored as the multiplicity of
/// each square class. Over Q a square class is a signed squarefree integer;
/// over F_p it is 1 or the least quadratic nonresidue.
class GWClass {
 public:
  using Count = std::int64_t;

  /// The zero class over k.
  explicit GWClass(BaseField field = BaseField::rationals());
  /// Diagonal form <a_1> + ... + <a_n>; every entry must be nonzero.
  GWClass(BaseField field, const std::vector<Rational>& entries);

  static GWClass unit(BaseField field, const Rational& a);
  /// m * (<1> + <-1>).
  static GWClass hyperbolic(BaseField field, Count m = 1);

  const BaseField& field() const { return field_; }
  /// Square class -> multiplicity.
  const std::map<Integer, Count>& multiplicities() const { return counts_; }
  /// Square-class representatives with repetition, ascending. Refused for
  /// ranks above kMaxExpandedRank.
  std::vector<Integer> diagonal() const;
  Count rank() const { return rank_; }
  /// Number of positive minus number of negative entries (0 over F_p).
  Count signature() const { return signature_; }
  /// Square class of the product of the diagonal.
  const Integer& discriminant() const { return disc_; }
  /// Hasse invariants at the primes dividing 2 * prod(diagonal) (Q only).
  const std::map<Integer, int>& hasse() const { return hasse_; }
  /// Hasse invariant at any prime; +1 outside the stored support.
  int hasse_at(const Integer& p) const;

  std::optional<Count> hyperbolic_multiple() const;
  /// The canonical diagonal representative of this class.
  GWClass canonical() const;
  std::string display(bool ascii = false) const;

  GWClass operator+(const GWClass& o) const;
  GWClass operator*(const GWClass& o) const;
  GWClass& operator+=(const GWClass& o) { return *this = *this + o; }
  /// Equality in GW(k).
  bool operator==(const GWClass& o) const;
  bool operator!=(const GWClass& o) const { return !(*this == o); }

  static constexpr Count kMaxExpandedRank = 1000000;

  friend GWClass operator*(Count m, const GWClass& x);

 private:
  struct FromCounts {};
  GWClass(BaseField field, std::map<Integer, Count> counts, FromCounts);
  void compute_invariants();
  void check_field(const GWClass& o) const;

  BaseField field_;
  std::map<Integer, Count> counts_;
  Count rank_ = 0;
  Count signature_ = 0;
  Integer disc_ = 1;
  std::map<Integer, int> hasse_;
};

GWClass operator*(GWClass::Count m, const GWClass& x);

inline GWClass gw_add(const GWClass& x, const GWClass& y) { return x + y; }
inline GWClass gw_mul(const GWClass& x, const GWClass& y) { return x * y; }
inline bool gw_equal(const GWClass& x, const GWClass& y) { return x == y; }
inline std::optional<GWClass::Count> hyperbolic_multiple(const GWClass& x) { return x.hyperbolic_multiple(); }

GWClass diagonalize(const SymmetricForm<Rational>& m);
GWClass diagonalize(const SymmetricForm<ModP>& m);

/// Class of the Hankel form with constant antidiagonals A_1..A_n filling the
/// upper-left triangle and zero below the main antidiagonal.
GWClass antidiagonal_class(BaseField field, const std::vector<Rational>& a);
/// The Hankel matrix whose class antidiagonal_class returns.
Matrix<Rational> antidiagonal_hankel(const std::vector<Rational>& a);

/// Tr_{L/Q} of the form given by a symmetric Gram matrix over L.
GWClass transfer_trace(const FieldPtr& field, const Matrix<NFElement>& gram);

/// The Q-bilinear form Tr_{L/Q} o gram on the basis {v_i theta^a}.
Matrix<Rational> trace_form(const FieldPtr& field, const Matrix<NFElement>& gram);

}  // namespace a1deg
