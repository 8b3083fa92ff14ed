#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "a1deg/arith.hpp"
#include "a1deg/error.hpp"

namespace a1deg {

namespace detail {
template <class K>
bool is_zero_scalar(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field K, lowest degree first.
///
/// K is Rational, ModP or NFElement. Every polynomial carries a zero element
/// of its field so that context-dependent scalars (a modulus, a number field)
/// survive through the zero polynomial.
template <class K>
class UniPoly {
 public:
  UniPoly() requires std::is_default_constructible_v<K> : zero_(), var_("x") {}
  explicit UniPoly(K zero, std::vector<K> coeffs = {}, std::string var = "x")
      : zero_(std::move(zero)), coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static UniPoly constant(const K& c, std::string var = "x") {
    return UniPoly(zero_like(c), {c}, std::move(var));
  }
  static UniPoly monomial(const K& c, int degree, std::string var = "x") {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, zero_like(c));
    v.back() = c;
    return UniPoly(zero_like(c), std::move(v), std::move(var));
  }
  /// The polynomial `x` in the field of `like`.
  static UniPoly variable(const K& like, std::string var = "x") {
    return monomial(one_like(like), 1, std::move(var));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<K>& coefficients() const { return coeffs_; }
  const K& coefficient(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : zero_;
  }
  const K& leading() const { return coefficient(degree()); }
  const K& zero_scalar() const { return zero_; }
  K one_scalar() const { return one_like(zero_); }
  const std::string& var() const { return var_; }
  UniPoly with_var(std::string v) const {
    UniPoly r = *this;
    r.var_ = std::move(v);
    return r;
  }

  UniPoly zero() const { return UniPoly(zero_, {}, var_); }
  UniPoly one() const { return constant(one_scalar(), var_); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UniPoly operator+(const UniPoly& o) const {
    std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return UniPoly(zero_, std::move(v), var_);
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<K> v(coeffs_.size() + o.coeffs_.size() - 1, zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (detail::is_zero_scalar(coeffs_[i])) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
      }
    }
    return UniPoly(zero_, std::move(v), var_);
  }
  UniPoly operator*(const K& c) const {
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {zero(), *this};
    std::vector<K> rem = coeffs_;
    std::vector<K> quo(coeffs_.size() - d.coeffs_.size() + 1, zero_);
    K inv_lead = inverse(d.leading());
    for (int i = degree(); i >= d.degree(); --i) {
      if (detail::is_zero_scalar(rem[i])) continue;
      K q = rem[i] * inv_lead;
      int shift = i - d.degree();
      quo[shift] = q;
      for (int j = 0; j <= d.degree(); ++j) rem[shift + j] = rem[shift + j] - q * d.coeffs_[j];
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {UniPoly(zero_, std::move(quo), var_), UniPoly(zero_, std::move(rem), var_)};
  }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  /// True iff d divides this polynomial exactly.
  bool divisible_by(const UniPoly& d) const { return (*this % d).is_zero(); }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * inverse(leading());
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<K> v(coeffs_.size() - 1, zero_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      v[i - 1] = coeffs_[i] * from_int(zero_, static_cast<long>(i));
    }
    return UniPoly(zero_, std::move(v), var_);
  }

  K operator()(const K& x) const {
    K acc = zero_;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// f(g(x)) by Horner's rule.
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc = g.zero();
    for (int i = degree(); i >= 0; --i) acc = acc * g + constant(coeffs_[i], g.var_);
    return acc;
  }

  UniPoly pow(unsigned e) const {
    UniPoly result = one(), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// The residue modulo x^n.
  UniPoly truncate(int n) const {
    std::vector<K> v(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), n));
    return UniPoly(zero_, std::move(v), var_);
  }

  /// Largest e with x^e dividing this nonzero polynomial.
  int order_at_zero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!detail::is_zero_scalar(coeffs_[i])) return static_cast<int>(i);
    }
    throw DomainError("order_at_zero: zero polynomial");
  }

  /// Exact division by x^e.
  UniPoly shift_down(int e) const {
    if (e == 0) return *this;
    if (e > static_cast<int>(coeffs_.size())) return zero();
    return UniPoly(zero_, std::vector<K>(coeffs_.begin() + e, coeffs_.end()), var_);
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }

  K zero_;
  std::vector<K> coeffs_;
  std::string var_;
};

template <class K>
UniPoly<K> operator*(const K& c, const UniPoly<K>& f) {
  return f * c;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class K>
struct ExtGcd {
  UniPoly<K> g, s, t;
};

template <class K>
ExtGcd<K> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r0 = a, r1 = b, s0 = a.one(), s1 = a.zero(), t0 = a.zero(), t1 = a.one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = inverse(r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Re-express the coefficients in another field.
template <class K, class L, class Fn>
UniPoly<L> map_coefficients(const UniPoly<K>& f, const L& zero, Fn&& fn) {
  std::vector<L> v;
  v.reserve(f.coefficients().size());
  for (const K& c : f.coefficients()) v.push_back(fn(c));
  return UniPoly<L>(zero, std::move(v), f.var());
}

namespace detail {

inline bool scalar_is_negative(const Rational& c) { return sgn(c) < 0; }
template <class K>
bool scalar_is_negative(const K&) {
  return false;
}

inline bool scalar_is_one(const Rational& c) { return c == 1; }
template <class K>
bool scalar_is_one(const K& c) {
  return c == one_like(c);
}

template <class K>
bool scalar_is_atomic(const K& c) {
  std::string s = to_string(c);
  return s.find_first_of("+ ") == std::string::npos && s.find('-', 1) == std::string::npos;
}

/// Appends " + c*m", " - c*m" or the leading form of a term. `monomial` is
/// empty for a constant term.
template <class K>
void append_term(std::ostringstream& os, const K& c, const std::string& monomial, bool first) {
  bool neg = scalar_is_negative(c);
  K mag = neg ? K(-c) : c;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << (scalar_is_atomic(mag) ? to_string(mag) : "(" + to_string(mag) + ")");
    return;
  }
  if (!scalar_is_one(mag)) {
    os << (scalar_is_atomic(mag) ? to_string(mag) : "(" + to_string(mag) + ")") << "*";
  }
  os << monomial;
}

}  // namespace detail

template <class K>
std::string UniPoly<K>::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (detail::is_zero_scalar(coeffs_[i])) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var_ : var_ + "^" + std::to_string(i));
    detail::append_term(os, coeffs_[i], mono, first);
    first = false;
  }
  return os.str();
}

template <class K>
std::string to_string(const UniPoly<K>& f) {
  return f.to_string();
}

using QPoly = UniPoly<Rational>;

/// Convenience constructor for integer-coefficient test data, lowest first.
inline QPoly qpoly(std::initializer_list<long> coeffs, std::string var = "x") {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(Rational(0), std::move(v), std::move(var));
}

}  // namespace a1deg
