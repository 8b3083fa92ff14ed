#include "a1deg/local_degree.hpp"

#include "a1deg/factor.hpp"

namespace a1deg {

GWClass ekl_univariate_local(const QPoly& u, const QPoly& w, int e) {
  return diagonalize(SymmetricForm<Rational>(ekl_univariate_gram(u, w, e)));
}

GWClass ekl_univariate_local(const UniPoly<ModP>& u, const UniPoly<ModP>& w, int e) {
  return diagonalize(SymmetricForm<ModP>(ekl_univariate_gram(u, w, e)));
}

LocalDegreeResult local_degrees_of_rational_map(const RationalMap& m, const Rational& q) {
  return local_degrees_of_rational_map(m.numerator(), m.denominator(), q);
}

LocalDegreeResult local_degrees_of_rational_map(const QPoly& f, const QPoly& g, const Rational& q) {
  if (gcd(f, g).degree() > 0) throw DomainError("rational map: numerator and denominator share a factor");
  const int degree = std::max(f.degree(), g.degree());
  QPoly h = f - g.with_var(f.var()) * q;
  if (h.degree() < 1) throw DomainError("empty fiber");
  if (gcd(h, g.with_var(f.var())).degree() > 0) throw DomainError("fiber meets the pole locus; choose another q");
  if (h.degree() < degree) throw DomainError("fiber contains the point at infinity; choose another q");

  LocalDegreeResult out{{}, GWClass(BaseField::rationals())};
  for (const auto& [point, mult] : factor_over_q(h).factors) {
    FieldPtr field = NumberField::make(point, "a");
    NFPoly u = shift_into(h, field);
    NFPoly w = shift_into(g.with_var(f.var()), field);
    GWClass idx = transfer_trace(field, ekl_univariate_gram(u, w, mult));
    out.total += idx;
    out.points.push_back({point, mult, std::move(idx)});
  }
  return out;
}

EKLResult ekl_multivariate_at_origin(const std::vector<MultiPoly<Rational>>& f, SocleNormalization norm) {
  EKLData<Rational> d = ekl_data(f, norm);
  return {diagonalize(SymmetricForm<Rational>(d.gram)), static_cast<int>(d.basis.size())};
}

EKLResult ekl_multivariate_at_origin(const std::vector<MultiPoly<ModP>>& f, SocleNormalization norm) {
  EKLData<ModP> d = ekl_data(f, norm);
  return {diagonalize(SymmetricForm<ModP>(d.gram)), static_cast<int>(d.basis.size())};
}

UnitComparison compare_local_units(const GWClass& a, const GWClass& b) {
  if (a.field() != b.field() || a.rank() != b.rank()) {
    return {UnitComparison::Status::Unrelated, std::nullopt, "classes have different ranks or fields"};
  }
  if (a.rank() % 2 == 0) {
    if (a.hyperbolic_multiple() && b.hyperbolic_multiple()) {
      return {UnitComparison::Status::Unobservable, std::nullopt, "unit unobservable (hyperbolic)"};
    }
    return {UnitComparison::Status::Unobservable, std::nullopt, "unit unobservable (even rank)"};
  }
  // For odd rank, disc(<alpha> a) = alpha * disc(a).
  GWClass ratio = GWClass::unit(a.field(), Rational(a.discriminant() * b.discriminant()));
  Integer alpha = ratio.diagonal().front();
  if (ratio * a == b) return {UnitComparison::Status::Determined, alpha, "b = <" + alpha.get_str() + "> a"};
  return {UnitComparison::Status::Unrelated, std::nullopt, "no unit relates the two classes"};
}

}  // namespace a1deg
