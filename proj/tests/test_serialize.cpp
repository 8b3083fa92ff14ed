#include "doctest.h"

#include "a1deg/error.hpp"
#include "a1deg/serialize.hpp"
#include "support.hpp"

using namespace a1deg;

namespace {

const BaseField Q = BaseField::rationals();

GWClass random_class(std::mt19937_64& g, const BaseField& k) {
  std::vector<Rational> d;
  int n = static_cast<int>(test::uniform(g, 0, 7));
  for (int i = 0; i < n; ++i) {
    Rational a = k.is_rational() ? test::random_nonzero_rational(g, 50, 6) : Rational(test::uniform(g, 1, k.characteristic() - 1));
    d.push_back(a);
  }
  return GWClass(k, d);
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(integer_to_json(Integer(-12)) == Json(-12));
  CHECK(integer_to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(integer_from_json(Json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
  CHECK(rational_to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(rational_from_json(Json("-6/8")) == Rational(-3, 4));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(integer_from_json(Json("x1")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);
}

TEST_CASE("GW class schema") {
  Json j = gw_to_json(GWClass(Q, {2, 3}));
  CHECK(j["field"] == "Q");
  CHECK(j["diagonal"] == Json::array({2, 3}));
  CHECK(j["rank"] == 2);
  CHECK(j["signature"] == 2);
  CHECK(j["discriminant"] == 6);
  CHECK(j["hasse"] == Json{{"2", -1}, {"3", -1}});
  CHECK(j["display"] == "⟨2⟩ + ⟨3⟩");
  CHECK(j["hyperbolic_multiple"].is_null());

  Json h = gw_to_json(GWClass(Q, {1, -1}), true);
  CHECK(h["display"] == "<1> + <-1>");
  CHECK(h["hyperbolic_multiple"] == 1);

  Json f = gw_to_json(GWClass(BaseField::prime_field(7), {Rational(3)}));
  CHECK(f["field"] == "Fp:7");
  CHECK(f["signature"].is_null());
  CHECK(f["diagonal"] == Json::array({3}));
}

TEST_CASE("JSON round trip is the identity on canonical classes") {
  auto g = test::rng(50);
  for (const BaseField& k : {Q, BaseField::prime_field(3), BaseField::prime_field(101)}) {
    for (int i = 0; i < 100; ++i) {
      GWClass x = random_class(g, k);
      Json j = gw_to_json(x);
      GWClass back = gw_from_json(j);
      CHECK(back == x);
      CHECK(gw_to_json(back) == j);
      CHECK(gw_from_json(Json::parse(j.dump())) == x);
    }
  }
}

TEST_CASE("large classes serialize by multiplicity") {
  GWClass x = GWClass::hyperbolic(Q, kMaxJsonDiagonal) + GWClass(Q, {7});
  Json j = gw_to_json(x);
  CHECK(j["diagonal"].is_null());
  CHECK(j["multiplicities"] == Json{{"-1", kMaxJsonDiagonal}, {"1", kMaxJsonDiagonal}, {"7", 1}});
  CHECK(gw_from_json(j) == x);
  CHECK(gw_to_json(gw_from_json(j)) == j);
}

TEST_CASE("inconsistent GW JSON is rejected") {
  Json j = gw_to_json(GWClass(Q, {2, 3}));
  Json bad_rank = j;
  bad_rank["rank"] = 3;
  CHECK_THROWS_AS(gw_from_json(bad_rank), ParseError);
  Json bad_hasse = j;
  bad_hasse["hasse"]["3"] = 1;
  CHECK_THROWS_AS(gw_from_json(bad_hasse), ParseError);
  Json bad_disc = j;
  bad_disc["discriminant"] = 1;
  CHECK_THROWS_AS(gw_from_json(bad_disc), ParseError);
  CHECK_THROWS_AS(gw_from_json(Json{{"field", "Q"}}), ParseError);
  CHECK_THROWS_AS(gw_from_json(Json{{"field", "Q"}, {"diagonal", {0}}}), DomainError);
  CHECK_THROWS_AS(gw_from_json(Json{{"field", "F"}, {"diagonal", {1}}}), ParseError);
}

TEST_CASE("modular report schema") {
  Json a = report_to_json(a1_degree_modular(CoveringFamily::X0, 11));
  CHECK(a["family"] == "X0");
  CHECK(a["N"] == 11);
  CHECK(a["degree"] == 12);
  CHECK(a["profile"] == "all_double");
  CHECK(a["a1_degree"]["hyperbolic_multiple"] == 6);
  CHECK(a["warnings"] == Json::array());

  Json b = report_to_json(a1_degree_modular(CoveringFamily::X0, 5));
  CHECK(b["profile"] == Json{{"unramified", 2}});
  CHECK(b["a1_degree"]["unresolved_points"] == 2);
  CHECK(b["a1_degree"]["hyperbolic_part"]["hyperbolic_multiple"] == 2);

  Json c = report_to_json(a1_degree_modular(CoveringFamily::Full, 2));
  CHECK(c["family"] == "Full");
  CHECK(c["a1_degree"].is_null());
  CHECK(c["warnings"].size() == 2);
}

TEST_CASE("other reports") {
  Json m = matrix_to_json(Matrix<Rational>{{1, Rational(1, 2)}, {Rational(1, 2), 0}});
  CHECK(m == Json::array({Json::array({1, "1/2"}), Json::array({"1/2", 0})}));

  Json x = x011_to_json(verify_x011(x011_printed_data()));
  CHECK(x["proportional"] == true);
  CHECK(x["expected_lambda"] == 4);
  CHECK(x["alpha_squarefree"] == true);
  CHECK(x["conclusion"]["hyperbolic_multiple"] == 6);

  Json c = cross_check_to_json(cross_check_genus0(5));
  CHECK(c["N"] == 5);
  CHECK(c["agrees"] == true);
  CHECK(c["residual"]["display"] == "⟨1⟩ + ⟨−5⟩");

  Json l = local_degrees_to_json(local_degrees_of_rational_map(RationalMap::parse("(t+27)*(t+3)^3/t"), 0));
  CHECK(l["points"].size() == 2);
  CHECK(l["total"]["hyperbolic_multiple"] == 2);
}
