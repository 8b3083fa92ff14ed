#include "a1deg/number_field.hpp"

#include "a1deg/factor.hpp"

namespace a1deg {

NumberField::NumberField(QPoly m, std::string generator)
    : minpoly_(std::move(m)), generator_(std::move(generator)) {
  // Tr(theta^k) is the trace of the k-th power of the companion matrix:
  // the coefficient of theta^i in theta^(i+k) mod m, summed over i.
  const int d = degree();
  power_traces_.assign(static_cast<std::size_t>(d), Rational(0));
  QPoly x = QPoly::variable(Rational(0), minpoly_.var());
  std::vector<QPoly> powers{QPoly::constant(Rational(1), minpoly_.var())};
  for (int k = 1; k < 2 * d; ++k) powers.push_back((powers.back() * x) % minpoly_);
  for (int k = 0; k < d; ++k) {
    Rational t = 0;
    for (int i = 0; i < d; ++i) t += powers[static_cast<std::size_t>(i + k)].coefficient(i);
    power_traces_[static_cast<std::size_t>(k)] = t;
  }
}

FieldPtr NumberField::make(const QPoly& m, std::string generator) {
  if (m.degree() < 1) throw DomainError("number field: minimal polynomial must have degree >= 1");
  QPoly monic = m.monic();
  if (!is_irreducible_over_q(monic)) {
    throw DomainError("number field: " + monic.to_string() + " is reducible over Q");
  }
  return FieldPtr(new NumberField(std::move(monic), std::move(generator)));
}

NFElement::NFElement(FieldPtr field, const QPoly& rep) : field_(std::move(field)), rep_(rep) {
  if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->minpoly();
}

NFElement::NFElement(FieldPtr field, const Rational& q)
    : field_(std::move(field)), rep_(QPoly::constant(q)) {
  if (sgn(q) == 0) rep_ = QPoly(Rational(0));
}

NFElement NFElement::generator(FieldPtr field) {
  QPoly x = QPoly::variable(Rational(0));
  return NFElement(std::move(field), x);
}

void NFElement::check_same(const NFElement& o) const {
  if (field_ != o.field_ && field_->minpoly() != o.field_->minpoly()) {
    throw DomainError("number field elements from different fields");
  }
}

NFElement NFElement::operator+(const NFElement& o) const {
  check_same(o);
  return NFElement(field_, rep_ + o.rep_);
}

NFElement NFElement::operator-(const NFElement& o) const {
  check_same(o);
  return NFElement(field_, rep_ - o.rep_);
}

NFElement NFElement::operator*(const NFElement& o) const {
  check_same(o);
  return NFElement(field_, rep_ * o.rep_);
}

bool NFElement::operator==(const NFElement& o) const {
  check_same(o);
  return rep_ == o.rep_;
}

NFElement NFElement::inverse() const {
  if (rep_.is_zero()) throw DomainError("division by zero in number field");
  ExtGcd<Rational> e = ext_gcd(rep_, field_->minpoly());
  return NFElement(field_, e.s);
}

NFElement NFElement::times_generator() const {
  return NFElement(field_, rep_ * QPoly::variable(Rational(0)));
}

Rational trace_of_element(const NFElement& alpha) {
  Rational t = 0;
  const auto& c = alpha.rep().coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) t += c[i] * alpha.field()->trace_of_power(static_cast<int>(i));
  return t;
}

std::string to_string(const NFElement& x) { return x.rep().with_var(x.field()->generator()).to_string(); }

NFPoly shift_into(const QPoly& f, const FieldPtr& field) {
  NFElement zero(field, Rational(0));
  NFPoly lifted = map_coefficients(f, zero, [&](const Rational& c) { return NFElement(field, c); });
  NFPoly x_plus_theta(zero, {NFElement::generator(field), NFElement(field, Rational(1))}, f.var());
  return lifted.compose(x_plus_theta);
}

ShiftedRoot shift_to_root(const QPoly& f, const QPoly& g) {
  if (f.is_zero()) throw DomainError("shift_to_root: zero polynomial");
  if (!f.divisible_by(g)) throw DomainError("shift_to_root: " + g.to_string() + " does not divide " + f.to_string());
  FieldPtr field = NumberField::make(g);
  NFPoly shifted = shift_into(f, field);
  return {field, shifted, shifted.order_at_zero()};
}

}  // namespace a1deg
