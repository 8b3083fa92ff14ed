#pragma once

#include "json.hpp"

#include "a1deg/bezout.hpp"
#include "a1deg/gw.hpp"
#include "a1deg/local_degree.hpp"
#include "a1deg/modular.hpp"

namespace a1deg {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json integer_to_json(const Integer& x);
Json rational_to_json(const Rational& x);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

inline constexpr GWClass::Count kMaxJsonDiagonal = 100000;

/// {"field", "diagonal", "rank", "signature", "discriminant", "hasse",
///  "display", "hyperbolic_multiple"}; the diagonal is canonical. Above
/// kMaxJsonDiagonal entries "diagonal" is null and "multiplicities" maps each
/// square class to its count.
Json gw_to_json(const GWClass& x, bool ascii = false);
/// Rebuilds the class from "field" and "diagonal" (or "multiplicities") and checks any stored
/// invariants against it.
GWClass gw_from_json(const Json& j);

Json matrix_to_json(const Matrix<Rational>& m);
Json report_to_json(const ModularCoverReport& r, bool ascii = false);
Json local_degrees_to_json(const LocalDegreeResult& r, bool ascii = false);
Json x011_to_json(const X011Report& r, bool ascii = false);
Json cross_check_to_json(const GenusZeroCrossCheck& c, bool ascii = false);

}  // namespace a1deg
