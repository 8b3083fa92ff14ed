#include "doctest.h"

#include "a1deg/bezout.hpp"
#include "a1deg/error.hpp"
#include "a1deg/local_degree.hpp"
#include "a1deg/parse.hpp"
#include "support.hpp"

using namespace a1deg;

namespace {

const BaseField Q = BaseField::rationals();
const GWClass H = GWClass::hyperbolic(Q);

QPoly up(const std::string& s) { return parse_unipoly(s, "x"); }

std::vector<MultiPoly<Rational>> system(std::initializer_list<const char*> polys,
                                        const std::vector<std::string>& vars = {"x", "y"}) {
  std::vector<MultiPoly<Rational>> out;
  for (const char* p : polys) out.push_back(parse_poly(p, vars));
  return out;
}

std::vector<MultiPoly<ModP>> reduce(const std::vector<MultiPoly<Rational>>& f, std::int64_t p) {
  std::vector<MultiPoly<ModP>> out;
  for (const auto& fi : f) {
    out.push_back(map_coefficients(fi, ModP(0, p), [p](const Rational& c) { return ModP::from_rational(c, p); }));
  }
  return out;
}

}  // namespace

TEST_CASE("univariate local classes") {
  CHECK(ekl_univariate_local(up("x^2"), up("1"), 2) == H);
  CHECK(ekl_univariate_local(up("x"), up("1"), 1) == GWClass(Q, {1}));
  CHECK(ekl_univariate_local(up("3x + x^2"), up("1 + x"), 1) == GWClass(Q, {3}));
  for (int n = 1; n <= 7; ++n) {
    for (long c : {1L, 2L, -3L, 6L}) {
      QPoly u = QPoly::monomial(Rational(1), n, "x");
      CHECK(ekl_univariate_local(u, QPoly::constant(Rational(c), "x"), n) == monomial_degree_closed_form(n, c));
    }
  }

  BaseField f7 = BaseField::prime_field(7);
  UniPoly<ModP> u(ModP(0, 7), {ModP(0, 7), ModP(0, 7), ModP(0, 7), ModP(3, 7)}, "x");
  UniPoly<ModP> w = UniPoly<ModP>::constant(ModP(1, 7), "x");
  CHECK(ekl_univariate_local(u, w, 3) == GWClass(f7, {Rational(3)}) + GWClass::hyperbolic(f7));

  CHECK_THROWS_WITH_AS(ekl_univariate_local(up("x + 1"), up("1"), 0), "not a zero", DomainError);
  CHECK_THROWS_WITH_AS(ekl_univariate_local(up("0"), up("1"), 2), "section vanishes identically", DomainError);
  CHECK_THROWS_WITH_AS(ekl_univariate_local(up("x^2"), up("x"), 2), "denominator not a unit", DomainError);
  CHECK_THROWS_AS(ekl_univariate_local(up("x^3"), up("1"), 2), DomainError);
}

TEST_CASE("series inverse") {
  auto g = test::rng(40);
  for (int i = 0; i < 30; ++i) {
    QPoly w = test::random_poly(g, 4, 9, "x");
    if (sgn(w.coefficient(0)) == 0) continue;
    int n = static_cast<int>(test::uniform(g, 1, 9));
    CHECK((w * series_inverse(w, n)).truncate(n) == QPoly::constant(Rational(1), "x"));
  }
}

TEST_CASE("local indices of rational maps") {
  LocalDegreeResult a = local_degrees_of_rational_map(RationalMap::parse("(t+27)*(t+3)^3/t"), 1728);
  CHECK(a.total == GWClass::hyperbolic(Q, 2));

  LocalDegreeResult b = local_degrees_of_rational_map(up("x^2"), up("1"), 0);
  REQUIRE(b.points.size() == 1);
  CHECK(b.points[0].point == up("x"));
  CHECK(b.points[0].multiplicity == 2);
  CHECK(b.points[0].index == H);

  // One closed point Q(sqrt2); the index is the trace form of <2 theta>.
  LocalDegreeResult c = local_degrees_of_rational_map(up("x^2 - 2"), up("1"), 0);
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0].point == up("x^2 - 2"));
  CHECK(c.points[0].multiplicity == 1);
  CHECK(c.points[0].index == H);
  CHECK(c.total.rank() == 2);

  LocalDegreeResult d = local_degrees_of_rational_map(up("x^3 - 1"), up("x^2 + 1"), 0);
  CHECK(d.total.rank() == 3);

  CHECK_THROWS_WITH_AS(local_degrees_of_rational_map(up("x + 1"), up("x"), 1), "empty fiber", DomainError);
  CHECK_THROWS_WITH_AS(local_degrees_of_rational_map(up("x^2 + 1"), up("x^2 + x"), 1),
                       "fiber contains the point at infinity; choose another q", DomainError);
  CHECK_THROWS_AS(local_degrees_of_rational_map(up("x^2 - 1"), up("x - 1"), 3), DomainError);
}

TEST_CASE("fiber over 0 of (t+27)(t+3)^3/t") {
  LocalDegreeResult r = local_degrees_of_rational_map(RationalMap::parse("(t+27)*(t+3)^3/t"), 0);
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].point == parse_unipoly("t + 3", "t"));
  CHECK(r.points[0].multiplicity == 3);
  CHECK(r.points[1].point == parse_unipoly("t + 27", "t"));
  CHECK(r.points[1].multiplicity == 1);
  CHECK(r.total == GWClass::hyperbolic(Q, 2));
}

TEST_CASE("summed local indices equal the Bezout class") {
  auto g = test::rng(41);
  for (int i = 0; i < 50; ++i) {
    RationalMap m = test::random_map(g, 6, 9);
    Rational q = test::random_fiber(g, m);
    LocalDegreeResult r = local_degrees_of_rational_map(m, q);
    int rank = 0;
    for (const auto& p : r.points) rank += p.point.degree() * p.multiplicity;
    CHECK(rank == m.degree());
    CHECK_MESSAGE(r.total == global_a1_degree(m), m.to_string() << " over " << q.get_str());
  }
}

TEST_CASE("multivariate EKL classes") {
  for (auto norm : {SocleNormalization::DividedDifferences, SocleNormalization::Jacobian}) {
    EKLResult e = ekl_multivariate_at_origin(system({"y^2 - x^3 + x", "x"}), norm);
    CHECK(e.cls == H);
    CHECK(e.dimension == 2);

    EKLResult one = ekl_multivariate_at_origin(system({"x"}, {"x"}), norm);
    CHECK(one.cls == GWClass(Q, {1}));
    CHECK(one.dimension == 1);

    EKLResult sq = ekl_multivariate_at_origin(system({"x^2", "y^2"}), norm);
    CHECK(sq.cls == GWClass::hyperbolic(Q, 2));
    CHECK(sq.dimension == 4);
  }
}

TEST_CASE("EKL data for the elliptic example") {
  EKLData<Rational> d = ekl_data(system({"y^2 - x^3 + x", "x"}));
  CHECK(d.basis == std::vector<Exponent>{{0, 0}, {0, 1}});
  CHECK(d.socle == std::vector<Rational>{0, -1});
  CHECK(d.functional == std::vector<Rational>{0, -1});
  CHECK(d.gram == Matrix<Rational>{{0, -1}, {-1, 0}});

  std::vector<Rational> bad{0, 1};
  CHECK_THROWS_AS(ekl_data(system({"y^2 - x^3 + x", "x"}), SocleNormalization::DividedDifferences, &bad), DomainError);
}

TEST_CASE("simple zeros have class <det J(0)>") {
  // f = (l1 + k l2^2, l2) for independent linear forms l1, l2 vanishes only at 0.
  auto g = test::rng(42);
  const std::vector<std::string> v{"x", "y"};
  for (int i = 0; i < 40; ++i) {
    Rational a = test::random_rational(g, 5), b = test::random_rational(g, 5), c = test::random_rational(g, 5),
             d = test::random_rational(g, 5);
    Rational det = a * d - b * c;
    if (sgn(det) == 0) continue;
    auto l1 = MultiPoly<Rational>::monomial(a, {1, 0}, v) + MultiPoly<Rational>::monomial(b, {0, 1}, v);
    auto l2 = MultiPoly<Rational>::monomial(c, {1, 0}, v) + MultiPoly<Rational>::monomial(d, {0, 1}, v);
    auto k = MultiPoly<Rational>::constant(test::random_rational(g, 5), v);
    EKLResult e = ekl_multivariate_at_origin({l1 + k * l2 * l2, l2});
    CHECK(e.dimension == 1);
    CHECK(e.cls == GWClass::unit(Q, det));
  }
}

TEST_CASE("separated systems multiply") {
  auto g = test::rng(43);
  for (int i = 0; i < 25; ++i) {
    int a = static_cast<int>(test::uniform(g, 1, 4)), b = static_cast<int>(test::uniform(g, 1, 3));
    Rational c1 = test::random_nonzero_rational(g, 9), c2 = test::random_nonzero_rational(g, 9);
    auto f1 = MultiPoly<Rational>::monomial(c1, {a, 0}, {"x", "y"});
    auto f2 = MultiPoly<Rational>::monomial(c2, {0, b}, {"x", "y"});
    for (auto norm : {SocleNormalization::DividedDifferences, SocleNormalization::Jacobian}) {
      EKLResult e = ekl_multivariate_at_origin({f1, f2}, norm);
      CHECK(e.dimension == a * b);
      CHECK(e.cls == monomial_degree_closed_form(a, c1) * monomial_degree_closed_form(b, c2));
    }
  }
}

TEST_CASE("one-variable systems agree with the univariate formula") {
  auto g = test::rng(44);
  for (int e = 1; e <= 6; ++e) {
    Rational c = test::random_nonzero_rational(g, 9, 4);
    QPoly u = QPoly::monomial(c, e, "x");
    EKLResult m = ekl_multivariate_at_origin({to_multipoly(u)});
    CHECK(m.dimension == e);
    CHECK(m.cls == ekl_univariate_local(u, QPoly::constant(Rational(1), "x"), e));
  }
}

TEST_CASE("univariate classes depend only on the leading local coefficient") {
  // The Gram matrix is antidiagonal Hankel, so only its corner entry matters.
  auto g = test::rng(45);
  for (int i = 0; i < 40; ++i) {
    int e = static_cast<int>(test::uniform(g, 1, 6));
    QPoly unit = test::random_poly(g, 3, 9, "x"), w = test::random_poly(g, 2, 9, "x");
    if (sgn(unit.coefficient(0)) == 0 || sgn(w.coefficient(0)) == 0) continue;
    QPoly u = QPoly::monomial(Rational(1), e, "x") * unit;
    Rational lead = unit.coefficient(0) / w.coefficient(0);
    CHECK(ekl_univariate_local(u, w, e) == monomial_degree_closed_form(e, lead));
  }
}

TEST_CASE("three variables") {
  EKLResult e = ekl_multivariate_at_origin(system({"x^2", "y", "z^3 + x*z"}, {"x", "y", "z"}));
  CHECK(e.dimension == 6);
  CHECK(e.cls.rank() == 6);
  EKLResult f = ekl_multivariate_at_origin(system({"2x", "y^2", "-z"}, {"x", "y", "z"}));
  CHECK(f.cls == GWClass::unit(Q, -2) * H);
}

TEST_CASE("EKL over finite fields") {
  for (std::int64_t p : {3, 5, 7, 101}) {
    BaseField k = BaseField::prime_field(p);
    EKLResult e = ekl_multivariate_at_origin(reduce(system({"y^2 - x^3 + x", "x"}), p));
    CHECK(e.cls == GWClass::hyperbolic(k));
    CHECK(e.dimension == 2);
    EKLResult s = ekl_multivariate_at_origin(reduce(system({"2x + y^2", "y"}), p));
    CHECK(s.cls == GWClass::unit(k, 2));
  }
}

TEST_CASE("EKL preconditions") {
  CHECK_THROWS_AS(ekl_multivariate_at_origin(system({"x - 1", "y"})), DomainError);
  CHECK_THROWS_WITH_AS(ekl_multivariate_at_origin(system({"x*y", "x*y"})), "zero set not isolated", DomainError);
  CHECK_THROWS_WITH_AS(ekl_multivariate_at_origin(system({"x^2 - x", "y"})),
                       "global quotient has points away from origin - not supported", DomainError);
  CHECK_THROWS_AS(ekl_multivariate_at_origin(system({"x"}, {"x", "y"})), DomainError);
  CHECK_THROWS_AS(ekl_multivariate_at_origin(system({"x", "y", "z", "w", "v"}, {"x", "y", "z", "w", "v"})),
                  DomainError);
}

TEST_CASE("comparing local classes up to a unit") {
  UnitComparison a = compare_local_units(GWClass(Q, {1}), GWClass(Q, {-5}));
  CHECK(a.status == UnitComparison::Status::Determined);
  CHECK(a.alpha == Integer(-5));

  UnitComparison b = compare_local_units(GWClass(Q, {1, 1, -1}), GWClass(Q, {-1, -1, 1}));
  CHECK(b.status == UnitComparison::Status::Determined);
  CHECK(b.alpha == Integer(-1));

  UnitComparison c = compare_local_units(H, H);
  CHECK(c.status == UnitComparison::Status::Unobservable);
  CHECK(c.message == "unit unobservable (hyperbolic)");

  CHECK(compare_local_units(GWClass(Q, {1}), H).status == UnitComparison::Status::Unrelated);
  CHECK(compare_local_units(GWClass(Q, {1, 1, 1}), GWClass(Q, {1, 1, -1})).status ==
        UnitComparison::Status::Unrelated);
}
