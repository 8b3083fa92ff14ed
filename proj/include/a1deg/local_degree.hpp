#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a1deg/bezout.hpp"
#include "a1deg/groebner.hpp"
#include "a1deg/gw.hpp"
#include "a1deg/number_field.hpp"

namespace a1deg {

/// Inverse of the power series w modulo x^n by Newton iteration; w(0) != 0.
template <class K>
UniPoly<K> series_inverse(const UniPoly<K>& w, int n) {
  if (detail::is_zero_scalar(w.coefficient(0))) throw DomainError("denominator not a unit");
  UniPoly<K> v = UniPoly<K>::constant(inverse(w.coefficient(0)), w.var());
  const UniPoly<K> two = UniPoly<K>::constant(from_int(w.zero_scalar(), 2), w.var());
  for (int prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    v = (v * (two - (w.truncate(prec) * v).truncate(prec))).truncate(prec);
  }
  return v.truncate(n);
}

/// Gram matrix of the EKL form of the section u/w at the origin, on the basis
/// 1, x, ..., x^(e-1) of K[x]/(x^e). Requires x^e || u and w(0) != 0.
template <class K>
Matrix<K> ekl_univariate_gram(const UniPoly<K>& u, const UniPoly<K>& w, int e) {
  if (e <= 0) throw DomainError("not a zero");
  if (u.is_zero()) throw DomainError("section vanishes identically");
  if (w.is_zero() || detail::is_zero_scalar(w.coefficient(0))) throw DomainError("denominator not a unit");
  if (u.order_at_zero() != e) {
    throw DomainError("multiplicity mismatch: section vanishes to order " + std::to_string(u.order_at_zero()) +
                      ", expected " + std::to_string(e));
  }
  // E0 = (u/w)/x = (u/x) * w^-1 mod x^e; phi is dual to x^(e-1) with phi(E0) = 1.
  UniPoly<K> e0 = (u.shift_down(1) * series_inverse(w, e)).truncate(e);
  const K scale = inverse(e0.coefficient(e - 1));
  const K zero = u.zero_scalar();
  Matrix<K> gram(static_cast<std::size_t>(e), std::vector<K>(static_cast<std::size_t>(e), zero));
  for (int a = 0; a < e; ++a) {
    for (int b = 0; b < e; ++b) {
      if (a + b == e - 1) gram[a][b] = scale;
    }
  }
  return gram;
}

GWClass ekl_univariate_local(const QPoly& u, const QPoly& w, int e);
GWClass ekl_univariate_local(const UniPoly<ModP>& u, const UniPoly<ModP>& w, int e);

/// Contribution of one closed point of a fiber.
struct LocalIndex {
  QPoly point;       // monic irreducible factor of F - qG
  int multiplicity;  // ramification index
  GWClass index;     // Tr_{k(p)/Q} of the local EKL class
};

struct LocalDegreeResult {
  std::vector<LocalIndex> points;
  GWClass total;
};

/// Local indices of F/G over the fiber at q, transferred to Q.
LocalDegreeResult local_degrees_of_rational_map(const RationalMap& m, const Rational& q);
LocalDegreeResult local_degrees_of_rational_map(const QPoly& f, const QPoly& g, const Rational& q);

enum class SocleNormalization {
  DividedDifferences,  // phi(det(a_ij)) = 1
  Jacobian,            // eta(det(df_i/dx_j)) = dim Q_0(f)
};

/// Data of an EKL computation at the origin.
template <class K>
struct EKLData {
  std::vector<MultiPoly<K>> groebner;
  std::vector<Exponent> basis;
  std::vector<K> socle;       // normal form of the normalizing element on the basis
  std::vector<K> functional;  // values on the basis
  Matrix<K> gram;
};

/// Coordinates of the normal form of p on the staircase basis.
template <class K>
std::vector<K> basis_coordinates(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& gb,
                                 const std::vector<Exponent>& basis) {
  MultiPoly<K> r = normal_form(p, gb);
  std::vector<K> out;
  for (const Exponent& e : basis) out.push_back(r.coefficient(e));
  return out;
}

/// EKL computation for f with f(0) = 0 whose quotient is finite and local at
/// the origin. A supplied functional must satisfy the normalization.
template <class K>
EKLData<K> ekl_data(const std::vector<MultiPoly<K>>& f, SocleNormalization norm = SocleNormalization::DividedDifferences,
                    const std::vector<K>* functional = nullptr) {
  if (f.empty()) throw DomainError("ekl: empty system");
  const std::size_t n = f.size();
  for (const auto& fi : f) {
    if (fi.nvars() != n) throw DomainError("ekl: need n polynomials in n variables");
    if (!detail::is_zero_scalar(fi.constant_term())) throw DomainError("ekl: " + fi.to_string() + " does not vanish at the origin");
  }
  EKLData<K> d;
  d.groebner = groebner_basis(f);
  try {
    d.basis = quotient_basis(d.groebner);
  } catch (const DomainError&) {
    throw DomainError("zero set not isolated");
  }
  if (!is_local_at_origin(d.groebner)) {
    throw DomainError("global quotient has points away from origin - not supported");
  }
  const K zero = f[0].zero_scalar();
  const std::size_t dim = d.basis.size();
  MultiPoly<K> normalizer = norm == SocleNormalization::Jacobian ? jacobian_determinant(f)
                                                                 : determinant(coordinate_divided_differences(f));
  d.socle = basis_coordinates(normalizer, d.groebner, d.basis);
  const K target = norm == SocleNormalization::Jacobian ? from_int(zero, static_cast<long>(dim)) : one_like(zero);
  if (functional) {
    if (functional->size() != dim) throw DomainError("ekl: functional has the wrong length");
    K value = zero;
    for (std::size_t i = 0; i < dim; ++i) value = value + (*functional)[i] * d.socle[i];
    if (value != target) throw DomainError("ekl: functional does not satisfy the socle normalization");
    d.functional = *functional;
  } else {
    // Dual to the largest basis monomial occurring in the normalizer.
    std::size_t pick = dim;
    for (std::size_t i = dim; i-- > 0;) {
      if (!detail::is_zero_scalar(d.socle[i])) {
        pick = i;
        break;
      }
    }
    if (pick == dim) throw DomainError("degenerate socle");
    d.functional.assign(dim, zero);
    d.functional[pick] = target * inverse(d.socle[pick]);
  }
  const K one = one_like(zero);
  d.gram.assign(dim, std::vector<K>(dim, zero));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      Exponent e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = d.basis[a][i] + d.basis[b][i];
      std::vector<K> c = basis_coordinates(MultiPoly<K>::monomial(one, e, f[0].vars()), d.groebner, d.basis);
      K v = zero;
      for (std::size_t i = 0; i < dim; ++i) v = v + d.functional[i] * c[i];
      d.gram[a][b] = v;
      d.gram[b][a] = v;
    }
  }
  return d;
}

struct EKLResult {
  GWClass cls;
  int dimension;
};

EKLResult ekl_multivariate_at_origin(const std::vector<MultiPoly<Rational>>& f,
                                     SocleNormalization norm = SocleNormalization::DividedDifferences);
EKLResult ekl_multivariate_at_origin(const std::vector<MultiPoly<ModP>>& f,
                                     SocleNormalization norm = SocleNormalization::DividedDifferences);

/// Relation b = <alpha> a between two EKL classes of the same point.
struct UnitComparison {
  enum class Status { Determined, Unobservable, Unrelated };
  Status status;
  std::optional<Integer> alpha;
  std::string message;
};

UnitComparison compare_local_units(const GWClass& a, const GWClass& b);

}  // namespace a1deg
