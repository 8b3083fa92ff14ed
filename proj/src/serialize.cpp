#include "a1deg/serialize.hpp"

namespace a1deg {

Json integer_to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json rational_to_json(const Rational& x) {
  if (x.get_den() == 1) return integer_to_json(x.get_num());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid integer '" + j.get<std::string>() + "'", 0);
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump(), 0);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump(), 0);
}

Json gw_to_json(const GWClass& x, bool ascii) {
  GWClass c = x.canonical();
  Json j;
  j["field"] = c.field().to_string();
  if (c.rank() <= kMaxJsonDiagonal) {
    Json diag = Json::array();
    for (const Integer& a : c.diagonal()) diag.push_back(integer_to_json(a));
    j["diagonal"] = diag;
  } else {
    Json counts = Json::object();
    for (const auto& [a, k] : c.multiplicities()) counts[a.get_str()] = k;
    j["diagonal"] = nullptr;
    j["multiplicities"] = counts;
  }
  j["rank"] = c.rank();
  j["signature"] = c.field().is_rational() ? Json(c.signature()) : Json(nullptr);
  j["discriminant"] = integer_to_json(c.discriminant());
  Json hasse = Json::object();
  for (const auto& [p, e] : c.hasse()) hasse[p.get_str()] = e;
  j["hasse"] = hasse;
  j["display"] = c.display(ascii);
  auto m = c.hyperbolic_multiple();
  j["hyperbolic_multiple"] = m ? Json(*m) : Json(nullptr);
  return j;
}

GWClass gw_from_json(const Json& j) {
  const bool listed = j.is_object() && j.contains("diagonal") && j.at("diagonal").is_array();
  const bool counted = j.is_object() && j.contains("multiplicities") && j.at("multiplicities").is_object();
  if (!listed && !counted) throw ParseError("GW class JSON needs a \"diagonal\" array or \"multiplicities\"", 0);
  BaseField field = j.contains("field") ? BaseField::parse(j.at("field").get<std::string>()) : BaseField::rationals();
  GWClass x(field);
  if (listed) {
    std::vector<Rational> entries;
    for (const auto& a : j.at("diagonal")) entries.push_back(rational_from_json(a));
    x = GWClass(field, entries);
  } else {
    for (const auto& [a, k] : j.at("multiplicities").items()) {
      if (!k.is_number_integer() || k.get<std::int64_t>() < 0) throw ParseError("GW class JSON: bad multiplicity for " + a, 0);
      x += k.get<std::int64_t>() * GWClass::unit(field, parse_rational(a));
    }
  }
  auto mismatch = [](const std::string& what) { return ParseError("GW class JSON: stored " + what + " disagrees with the diagonal", 0); };
  if (j.contains("rank") && j.at("rank").get<std::int64_t>() != x.rank()) throw mismatch("rank");
  if (j.contains("signature") && !j.at("signature").is_null() && j.at("signature").get<std::int64_t>() != x.signature()) {
    throw mismatch("signature");
  }
  if (j.contains("discriminant") && integer_from_json(j.at("discriminant")) != x.discriminant()) {
    throw mismatch("discriminant");
  }
  if (j.contains("hasse")) {
    for (const auto& [p, e] : j.at("hasse").items()) {
      if (x.hasse_at(Integer(p)) != e.get<int>()) throw mismatch("Hasse invariant at " + p);
    }
  }
  return x;
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(rational_to_json(x));
    rows.push_back(row);
  }
  return rows;
}

Json report_to_json(const ModularCoverReport& r, bool ascii) {
  Json j;
  j["family"] = to_string(r.family);
  j["N"] = r.level;
  j["degree"] = rational_to_json(r.degree);
  if (r.profile.all_double) {
    j["profile"] = "all_double";
  } else {
    j["profile"] = Json{{"unramified", r.profile.unramified_count}};
  }
  if (r.a1_degree) {
    j["a1_degree"] = gw_to_json(*r.a1_degree, ascii);
  } else if (r.partial) {
    j["a1_degree"] = Json{{"hyperbolic_part", gw_to_json(r.partial->hyperbolic_part, ascii)},
                          {"unresolved_points", r.partial->unresolved_points}};
  } else {
    j["a1_degree"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

Json local_degrees_to_json(const LocalDegreeResult& r, bool ascii) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    pts.push_back(Json{{"point", p.point.to_string()}, {"multiplicity", p.multiplicity}, {"index", gw_to_json(p.index, ascii)}});
  }
  return Json{{"points", pts}, {"total", gw_to_json(r.total, ascii)}};
}

Json x011_to_json(const X011Report& r, bool ascii) {
  Json j;
  j["proportional"] = r.proportional;
  j["lambda"] = r.lambda ? rational_to_json(*r.lambda) : Json(nullptr);
  j["expected_lambda"] = rational_to_json(r.expected_lambda);
  j["residual"] = r.residual.to_string();
  j["alpha_squarefree"] = r.alpha_squarefree;
  j["alpha_coprime_to_c1"] = r.alpha_coprime_to_c1;
  Json f = Json::array();
  for (const auto& [g, e] : r.alpha_factors) f.push_back(Json{{"factor", g.to_string()}, {"multiplicity", e}});
  j["alpha_factors"] = f;
  j["conclusion"] = r.conclusion ? gw_to_json(*r.conclusion, ascii) : Json(nullptr);
  return j;
}

Json cross_check_to_json(const GenusZeroCrossCheck& c, bool ascii) {
  Json j;
  j["N"] = c.level;
  j["bezout"] = gw_to_json(c.bezout, ascii);
  j["modular"] = report_to_json(c.modular, ascii);
  j["fiber_1728"] = local_degrees_to_json(c.fiber, ascii);
  j["observed_unramified"] = c.observed_unramified;
  j["doubly_ramified_part"] = gw_to_json(c.doubly_ramified_part, ascii);
  j["residual"] = gw_to_json(c.residual, ascii);
  j["agrees"] = c.agrees;
  j["notes"] = c.notes;
  return j;
}

}  // namespace a1deg
