#include "a1deg/modular.hpp"

#include <algorithm>
#include <cctype>

#include "a1deg/factor.hpp"
#include "a1deg/parse.hpp"

namespace a1deg {

namespace {

GWClass::Count to_count(const Integer& m) {
  if (!mpz_fits_slong_p(m.get_mpz_t())) throw DomainError("multiplicity " + m.get_str() + " does not fit in 64 bits");
  return m.get_si();
}

void check_level(long n, long min_level, CoveringFamily family) {
  if (n > kMaxLevel) throw DomainError("level " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxLevel));
  if (n < min_level) {
    std::string msg = to_string(family) + " requires N >= " + std::to_string(min_level) + ", got " + std::to_string(n);
    for (const std::string& w : covering_warnings(family, n)) msg += "; " + w;
    throw DomainError(msg);
  }
}

std::vector<Integer> level_primes(long n) { return prime_divisors(Integer(n)); }

}  // namespace

std::string to_string(CoveringFamily f) {
  switch (f) {
    case CoveringFamily::X0:
      return "X0";
    case CoveringFamily::X1:
      return "X1";
    case CoveringFamily::Full:
      return "Full";
  }
  return "?";
}

CoveringFamily parse_family(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "x0") return CoveringFamily::X0;
  if (s == "x1") return CoveringFamily::X1;
  if (s == "full" || s == "x") return CoveringFamily::Full;
  throw ParseError("unknown covering family '" + text + "' (expected x0, x1 or full)", 0);
}

Rational covering_degree_formula(CoveringFamily family, long n) {
  if (n < 1) throw DomainError("level must be positive");
  if (n > kMaxLevel) throw DomainError("level " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxLevel));
  Rational nn(n);
  Rational prod = 1;
  for (const Integer& p : level_primes(n)) {
    Rational pp(p);
    prod *= family == CoveringFamily::X0 ? Rational(1 + 1 / pp) : Rational(1 - 1 / (pp * pp));
  }
  switch (family) {
    case CoveringFamily::X0:
      return nn * prod;
    case CoveringFamily::X1:
      return nn * nn * prod / 2;
    case CoveringFamily::Full:
      return nn * nn * nn * prod / 2;
  }
  return 0;
}

Integer covering_degree(CoveringFamily family, long n) {
  Rational d = covering_degree_formula(family, n);
  if (d.get_den() != 1) {
    std::string msg = "covering degree of " + to_string(family) + "(" + std::to_string(n) + ") is " + d.get_str() +
                      ", not an integer";
    for (const std::string& w : covering_warnings(family, n)) msg += "; " + w;
    throw DomainError(msg);
  }
  return d.get_num();
}

std::vector<std::string> covering_warnings(CoveringFamily family, long n) {
  std::vector<std::string> w;
  if (family == CoveringFamily::Full && n == 2) {
    w.push_back("-I lies in Gamma(2): the formula gives 3, the classical degree of X(2) -> X(1) is 6");
  }
  if (family == CoveringFamily::X1 && n == 2) {
    w.push_back("-I lies in Gamma1(2): the formula gives 3/2, the classical degree of X1(2) -> X(1) is 3");
  }
  if (family == CoveringFamily::X1 && n == 3) {
    w.push_back("X1(3) coincides with X0(3); the ramification statement for X1 needs N >= 4");
  }
  return w;
}

RamificationProfile ramification_profile_1728(CoveringFamily family, long n) {
  check_level(n, family == CoveringFamily::X1 ? 4 : 2, family);
  std::vector<Integer> primes = level_primes(n);
  const int d = static_cast<int>(primes.size());
  if (family != CoveringFamily::X0) return {true, d, 0};
  // -1 is a nonsquare mod an odd prime p exactly when p = 3 mod 4.
  bool all_double = n % 4 == 0;
  for (const Integer& p : primes) {
    if (p != 2 && legendre_symbol(Integer(-1), p) == -1) all_double = true;
  }
  if (all_double) return {true, d, 0};
  return {false, d, 1L << d};
}

ModularCoverReport a1_degree_modular(CoveringFamily family, long n) {
  RamificationProfile profile = ramification_profile_1728(family, n);
  Rational degree = covering_degree_formula(family, n);
  ModularCoverReport rep{family, n, degree, profile, std::nullopt, std::nullopt, covering_warnings(family, n)};
  if (degree.get_den() != 1) {
    rep.warnings.push_back("degree " + degree.get_str() + " is not an integer; no A1 degree reported");
    return rep;
  }
  const Integer& deg = degree.get_num();
  const BaseField q = BaseField::rationals();
  if (profile.all_double) {
    if (mpz_odd_p(deg.get_mpz_t())) {
      rep.warnings.push_back("degree " + deg.get_str() + " is odd, so (degree/2)(<1> + <-1>) is not integral");
      return rep;
    }
    rep.a1_degree = GWClass::hyperbolic(q, to_count(Integer(deg / 2)));
    return rep;
  }
  Integer rest = deg - profile.unramified_count;
  if (rest < 0 || mpz_odd_p(rest.get_mpz_t())) {
    rep.warnings.push_back("rank accounting (" + deg.get_str() + " - " + std::to_string(profile.unramified_count) +
                           ")/2 is not integral; no partial degree reported");
    return rep;
  }
  rep.partial = PartialDegree{GWClass::hyperbolic(q, to_count(Integer(rest / 2))),
                              profile.unramified_count};
  return rep;
}

const std::vector<HauptmodulEntry>& hauptmodul_catalog() {
  static const std::vector<HauptmodulEntry> catalog = [] {
    std::vector<HauptmodulEntry> c;
    auto add = [&c](long n, const std::string& text, const std::string& label) {
      RationalMap m = RationalMap::parse(text);
      Integer expected = covering_degree(CoveringFamily::X0, n);
      if (m.degree() != expected) {
        throw std::logic_error("catalog entry " + text + " has degree " + std::to_string(m.degree()) +
                               ", expected " + expected.get_str());
      }
      c.push_back({CoveringFamily::X0, n, m, label, text});
    };
    add(2, "(t + 16)^3 / t", "standard");
    add(2, "(t+256)^3 / t^2", "atkin_lehner");
    add(3, "(t+27)(t + 3)^3 / t", "standard");
    add(5, "(t^2+10t+5)^3 / t", "standard");
    return c;
  }();
  return catalog;
}

RationalMap atkin_lehner_involution(long n) {
  switch (n) {
    case 2:
      return RationalMap::parse("4096/t");
    case 3:
      return RationalMap::parse("729/t");
    case 5:
      return RationalMap::parse("125/t");
    default:
      throw DomainError("no Atkin-Lehner involution catalogued for level " + std::to_string(n));
  }
}

X011Data x011_printed_data() {
  const std::string t = "t";
  X011Data d{
      parse_unipoly("(t+6)*(t^3-2t^2-76t-212)", t),
      parse_unipoly("(1/2)*t^11 - (187/2)*t^9 - 253t^8 + 5720t^7 + 28721t^6 - 92092t^5"
                    " - 837892t^4 - 933856t^3 + 4126320t^2 + 9924800t + 4360000",
                    t),
      parse_unipoly("(1/2)*(t-1)(t+5)(t+4)(t+2)(t-10)(t^2-2t-44)(t^2-20)", t),
      parse_unipoly("7641728 + 6475200t + 2113680t^2 + 325856t^3 + 22692t^4 + 492t^5 - t^6", t),
  };
  return d;
}

X011Report verify_x011(const X011Data& data) {
  X011Report rep{false, std::nullopt, Rational(4), data.alpha.zero(), false, false, {}, std::nullopt};
  QPoly shifted = data.c0 - QPoly::constant(Rational(1728), data.c0.var());
  QPoly lhs = shifted * shifted - data.c1 * data.c1 * data.r;
  QPoly alpha2 = data.alpha * data.alpha;
  rep.residual = lhs;
  if (!alpha2.is_zero() && lhs.degree() == alpha2.degree()) {
    Rational lambda = lhs.leading() / alpha2.leading();
    QPoly residual = lhs - alpha2 * lambda;
    rep.residual = residual;
    if (residual.is_zero()) {
      rep.proportional = true;
      rep.lambda = lambda;
    }
  }
  rep.alpha_squarefree = is_squarefree(data.alpha);
  rep.alpha_coprime_to_c1 = gcd(data.alpha, data.c1).degree() == 0;
  rep.alpha_factors = factor_over_q(data.alpha).factors;
  if (rep.proportional && rep.alpha_squarefree && rep.alpha_coprime_to_c1) {
    // Each root of alpha is a doubly ramified point of degree deg(g).
    int points = 0;
    for (const auto& [g, e] : rep.alpha_factors) points += g.degree() * e;
    rep.conclusion = GWClass::hyperbolic(BaseField::rationals(), points);
  }
  return rep;
}

GenusZeroCrossCheck cross_check_genus0(long n) {
  const HauptmodulEntry* entry = nullptr;
  for (const auto& e : hauptmodul_catalog()) {
    if (e.level == n && e.label == "standard") entry = &e;
  }
  if (!entry) throw DomainError("level " + std::to_string(n) + " is not in the hauptmodul catalog");
  const BaseField q = BaseField::rationals();
  GenusZeroCrossCheck c{n,
                        global_a1_degree(entry->map),
                        a1_degree_modular(CoveringFamily::X0, n),
                        local_degrees_of_rational_map(entry->map, Rational(1728)),
                        0,
                        GWClass(q),
                        GWClass(q),
                        false,
                        {}};
  int max_e = 0;
  for (const auto& p : c.fiber.points) {
    max_e = std::max(max_e, p.multiplicity);
    if (p.multiplicity == 1) {
      c.observed_unramified += p.point.degree();
      c.residual += p.index;
    } else if (p.multiplicity == 2) {
      c.doubly_ramified_part += p.index;
    }
  }
  if (max_e > 2) c.notes.push_back("fiber over 1728 has a point of ramification index " + std::to_string(max_e));
  const bool local_matches = c.fiber.total == c.bezout;
  if (!local_matches) c.notes.push_back("local indices over 1728 do not sum to the Bezout class");
  if (c.modular.a1_degree) {
    c.agrees = local_matches && *c.modular.a1_degree == c.bezout;
  } else if (c.modular.partial) {
    const PartialDegree& p = *c.modular.partial;
    bool ramification = c.observed_unramified == p.unresolved_points;
    if (!ramification) {
      c.notes.push_back("predicted " + std::to_string(p.unresolved_points) + " unramified points, observed " +
                        std::to_string(c.observed_unramified));
    }
    bool hyperbolic = c.doubly_ramified_part == p.hyperbolic_part;
    c.agrees = local_matches && ramification && hyperbolic && p.hyperbolic_part + c.residual == c.bezout;
  } else {
    long predicted = c.modular.profile.unramified_count;
    c.notes.push_back("no modular A1 degree: " + (c.modular.warnings.empty() ? std::string("unavailable")
                                                                               : c.modular.warnings.back()));
    if (predicted != c.observed_unramified) {
      c.notes.push_back("predicted " + std::to_string(predicted) + " unramified points, observed " +
                        std::to_string(c.observed_unramified));
    }
    c.agrees = false;
  }
  return c;
}

}  // namespace a1deg
