#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "a1deg/unipoly.hpp"

namespace a1deg {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial. Terms are keyed by exponent vectors in
/// ascending lexicographic order with x1 > x2 > ... > xn, so the lex-leading
/// term is the last entry.
template <class K>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, K>;

  MultiPoly(K zero, std::vector<std::string> vars) : zero_(std::move(zero)), vars_(std::move(vars)) {}

  static MultiPoly constant(const K& c, std::vector<std::string> vars) {
    MultiPoly p(zero_like(c), std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly variable(const K& like, std::vector<std::string> vars, std::size_t index) {
    MultiPoly p(zero_like(like), std::move(vars));
    Exponent e(p.nvars(), 0);
    e.at(index) = 1;
    p.add_term(e, one_like(like));
    return p;
  }
  static MultiPoly monomial(const K& c, Exponent e, std::vector<std::string> vars) {
    MultiPoly p(zero_like(c), std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const K& zero_scalar() const { return zero_; }
  MultiPoly zero() const { return MultiPoly(zero_, vars_); }

  const K& coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }
  /// Lex-leading exponent; the polynomial must be nonzero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const K& leading_coefficient() const { return terms_.rbegin()->second; }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(Exponent e, const K& c) {
    if (e.size() != nvars()) throw std::invalid_argument("exponent length mismatch");
    if (detail::is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
  MultiPoly operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = zero();
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(std::move(e), c1 * c2);
      }
    }
    return r;
  }
  MultiPoly operator*(const K& c) const {
    MultiPoly r = zero();
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(one_like(zero_), vars_), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Multiply by the monomial x^e.
  MultiPoly shifted(const Exponent& e) const {
    MultiPoly r = zero();
    for (const auto& [t, c] : terms_) {
      Exponent s(nvars());
      for (std::size_t i = 0; i < nvars(); ++i) s[i] = t[i] + e[i];
      r.terms_.emplace(std::move(s), c);
    }
    return r;
  }

  K constant_term() const { return coefficient(Exponent(nvars(), 0)); }

  /// Set the variables with index >= first to zero.
  MultiPoly truncate_vars(std::size_t first) const {
    MultiPoly r = zero();
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (std::size_t i = first; i < nvars(); ++i) keep = keep && e[i] == 0;
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Exact division by the variable x_index; throws if some term is not divisible.
  MultiPoly divide_by_var(std::size_t index) const {
    MultiPoly r = zero();
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) throw DomainError("divide_by_var: inexact division");
      Exponent s = e;
      --s[index];
      r.terms_.emplace(std::move(s), c);
    }
    return r;
  }

  /// Evaluate all variables at the given point.
  K operator()(const std::vector<K>& point) const {
    K acc = zero_;
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < nvars(); ++i) {
        for (int k = 0; k < e[i]; ++k) t = t * point[i];
      }
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (std::size_t i = 0; i < nvars(); ++i) {
        int k = it->first[i];
        if (k == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (k > 1) mono += "^" + std::to_string(k);
      }
      detail::append_term(os, it->second, mono, first);
      first = false;
    }
    return os.str();
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mismatched variable lists");
  }

  K zero_;
  std::vector<std::string> vars_;
  Terms terms_;
};

template <class K>
std::string to_string(const MultiPoly<K>& f) {
  return f.to_string();
}

template <class K, class L, class Fn>
MultiPoly<L> map_coefficients(const MultiPoly<K>& f, const L& zero, Fn&& fn) {
  MultiPoly<L> r(zero, f.vars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
  return r;
}

/// View a polynomial in a single variable as a UniPoly.
template <class K>
UniPoly<K> to_unipoly(const MultiPoly<K>& f) {
  if (f.nvars() != 1) throw DomainError("expected a univariate polynomial");
  std::vector<K> v;
  for (const auto& [e, c] : f.terms()) {
    if (v.size() <= static_cast<std::size_t>(e[0])) v.resize(e[0] + 1, f.zero_scalar());
    v[e[0]] = c;
  }
  return UniPoly<K>(f.zero_scalar(), std::move(v), f.vars()[0]);
}

template <class K>
MultiPoly<K> to_multipoly(const UniPoly<K>& f) {
  MultiPoly<K> r(f.zero_scalar(), {f.var()});
  for (int i = 0; i <= f.degree(); ++i) r.add_term({i}, f.coefficient(i));
  return r;
}

template <class K>
using PolyMatrix = std::vector<std::vector<MultiPoly<K>>>;

/// The coordinate divided differences a_{i,j} with
/// f_i(x) = f_i(0) + sum_j a_{i,j} x_j, where
/// a_{i,j} = (f_i(x1..xj, 0..0) - f_i(x1..x_{j-1}, 0..0)) / x_j.
template <class K>
PolyMatrix<K> coordinate_divided_differences(const std::vector<MultiPoly<K>>& f) {
  const std::size_t n = f.size();
  PolyMatrix<K> a;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].nvars() != n) throw DomainError("divided differences need n polynomials in n variables");
    std::vector<MultiPoly<K>> row;
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly<K> diff = f[i].truncate_vars(j + 1) - f[i].truncate_vars(j);
      row.push_back(diff.divide_by_var(j));
    }
    a.push_back(std::move(row));
  }
  return a;
}

/// Determinant by cofactor expansion along the first row.
template <class K>
MultiPoly<K> determinant(const PolyMatrix<K>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly<K> acc = m[0][0].zero();
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix<K> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly<K>> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    MultiPoly<K> term = m[0][col] * determinant(minor);
    acc = col % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

template <class K>
MultiPoly<K> partial_derivative(const MultiPoly<K>& f, std::size_t index) {
  MultiPoly<K> r = f.zero();
  for (const auto& [e, c] : f.terms()) {
    if (e[index] == 0) continue;
    Exponent s = e;
    --s[index];
    r.add_term(std::move(s), c * from_int(c, e[index]));
  }
  return r;
}

/// det(d f_i / d x_j).
template <class K>
MultiPoly<K> jacobian_determinant(const std::vector<MultiPoly<K>>& f) {
  PolyMatrix<K> m;
  for (const auto& fi : f) {
    std::vector<MultiPoly<K>> row;
    for (std::size_t j = 0; j < fi.nvars(); ++j) row.push_back(partial_derivative(fi, j));
    m.push_back(std::move(row));
  }
  return determinant(m);
}

}  // namespace a1deg
