#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a1deg/bezout.hpp"
#include "a1deg/gw.hpp"
#include "a1deg/local_degree.hpp"

namespace a1deg {

enum class CoveringFamily { X0, X1, Full };

std::string to_string(CoveringFamily f);
/// Accepts x0, x1, full (case-insensitive).
CoveringFamily parse_family(const std::string& text);

inline constexpr long kMaxLevel = 1000000;

/// The index formula as a rational number:
///   X0: N prod(1 + 1/p), X1: N^2/2 prod(1 - 1/p^2), Full: N^3/2 prod(1 - 1/p^2).
Rational covering_degree_formula(CoveringFamily family, long n);

/// The formula value; DomainError if it is not an integer.
Integer covering_degree(CoveringFamily family, long n);

/// Known classical deviations of the formula at small levels.
std::vector<std::string> covering_warnings(CoveringFamily family, long n);

/// Ramification of the fiber over j = 1728.
struct RamificationProfile {
  bool all_double;
  int distinct_primes;   // D
  long unramified_count; // 2^D when not all_double, else 0
};

RamificationProfile ramification_profile_1728(CoveringFamily family, long n);

/// A1 degree known only up to the unramified points of the fiber.
struct PartialDegree {
  GWClass hyperbolic_part;
  long unresolved_points;
};

struct ModularCoverReport {
  CoveringFamily family;
  long level;
  Rational degree;
  RamificationProfile profile;
  std::optional<GWClass> a1_degree;     // all fibers doubly ramified
  std::optional<PartialDegree> partial; // exceptional X0 case
  std::vector<std::string> warnings;
};

ModularCoverReport a1_degree_modular(CoveringFamily family, long n);

struct HauptmodulEntry {
  CoveringFamily family;
  long level;
  RationalMap map;       // pullback of j in the hauptmodul t
  std::string label;     // "standard" or "atkin_lehner"
  std::string source;    // the map as printed
};

/// Genus-0 pullbacks of j: X0(2) and its Atkin-Lehner twin, X0(3), X0(5).
const std::vector<HauptmodulEntry>& hauptmodul_catalog();

/// The involution t -> c/t on the hauptmodul of X0(N), N in {2, 3, 5}.
RationalMap atkin_lehner_involution(long n);

/// Data of the genus-1 curve X0(11): y^2 = r(t), j = c0 - c1 y.
struct X011Data {
  QPoly r, c0, c1, alpha;
};

X011Data x011_printed_data();

struct X011Report {
  bool proportional;
  std::optional<Rational> lambda;  // (c0 - 1728)^2 - c1^2 r = lambda alpha^2
  Rational expected_lambda;        // as printed
  QPoly residual;                  // lhs - lambda alpha^2, or lhs if no lambda exists
  bool alpha_squarefree;
  bool alpha_coprime_to_c1;
  std::vector<std::pair<QPoly, int>> alpha_factors;
  std::optional<GWClass> conclusion;  // sum of deg(g) (<1> + <-1>) over factors g of alpha
};

X011Report verify_x011(const X011Data& data);

struct GenusZeroCrossCheck {
  long level;
  GWClass bezout;
  ModularCoverReport modular;
  LocalDegreeResult fiber;       // local indices over j = 1728
  long observed_unramified;      // sum of deg(g) over simple points of the fiber
  GWClass doubly_ramified_part;  // sum over points with e = 2
  GWClass residual;              // sum over simple points
  bool agrees;
  std::vector<std::string> notes;
};

GenusZeroCrossCheck cross_check_genus0(long n);

}  // namespace a1deg
