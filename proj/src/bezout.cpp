#include "a1deg/bezout.hpp"

#include "a1deg/parse.hpp"

namespace a1deg {

RationalMap::RationalMap(QPoly f, QPoly g) : f_(std::move(f)), g_(std::move(g)) {
  if (g_.is_zero()) throw DomainError("rational map: zero denominator");
  g_ = g_.with_var(f_.var());
  QPoly common = gcd(f_, g_);
  if (common.degree() > 0) {
    throw DomainError("rational map: numerator and denominator share the factor " + common.to_string());
  }
  if (degree() < 1) throw DomainError("rational map: constant map has no degree");
  if (g_.degree() > 0) {
    Rational s = Rational(1) / g_.leading();
    f_ = f_ * s;
    g_ = g_ * s;
  }
}

RationalMap RationalMap::parse(const std::string& text) {
  auto [num, den] = split_fraction(text);
  std::vector<std::string> ids = identifiers_in(text);
  if (ids.size() > 1) {
    throw ParseError("a rational map needs a single variable, found " + std::to_string(ids.size()), 0);
  }
  std::string var = ids.empty() ? "x" : ids[0];
  return RationalMap(parse_unipoly(num, var), parse_unipoly(den, var));
}

std::string RationalMap::to_string() const {
  auto wrap = [](const QPoly& p) {
    std::string s = p.to_string();
    return s.find_first_of("+ ") == std::string::npos && s.find('-', 1) == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(f_) + "/" + wrap(g_);
}

SymmetricForm<Rational> bezout_matrix(const RationalMap& m) {
  const int n = m.degree();
  const QPoly& f = m.numerator();
  const QPoly& g = m.denominator();
  // b[i][j] = b[i-1][j+1] - (f_i g_{j+1} - f_{j+1} g_i), with b[-1][.] = b[.][n] = 0.
  auto d = [&](int a, int b) { return Rational(f.coefficient(a) * g.coefficient(b) - f.coefficient(b) * g.coefficient(a)); };
  Matrix<Rational> b(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational prev = (i > 0 && j + 1 < n) ? b[i - 1][j + 1] : Rational(0);
      b[i][j] = prev - d(i, j + 1);
    }
  }
  return SymmetricForm<Rational>(std::move(b));
}

GWClass global_a1_degree(const RationalMap& m) { return diagonalize(bezout_matrix(m)); }

GWClass monomial_degree_closed_form(int n, const Rational& c) {
  if (n < 1) throw DomainError("monomial degree: n must be positive");
  if (sgn(c) == 0) throw DomainError("monomial degree: c must be nonzero");
  GWClass h = GWClass::hyperbolic(BaseField::rationals(), n / 2);
  return n % 2 == 0 ? h : GWClass::unit(BaseField::rationals(), c) + h;
}

RationalMap compose_with_fractional_linear(const RationalMap& m, const RationalMap& w) {
  if (w.degree() != 1) throw DomainError("compose: the substitution must have degree 1");
  const QPoly& a = w.numerator();
  const QPoly& b = w.denominator();
  const int n = m.degree();
  // F(a/b) * b^n and G(a/b) * b^n.
  auto homogenize = [&](const QPoly& p) {
    QPoly acc = a.zero();
    for (int i = 0; i <= p.degree(); ++i) {
      acc += QPoly::constant(p.coefficient(i), a.var()) * a.pow(static_cast<unsigned>(i)) *
             b.pow(static_cast<unsigned>(n - i));
    }
    return acc;
  };
  QPoly f = homogenize(m.numerator()).with_var(m.var());
  QPoly g = homogenize(m.denominator()).with_var(m.var());
  QPoly common = gcd(f, g);
  return RationalMap(f / common, g / common);
}

}  // namespace a1deg
