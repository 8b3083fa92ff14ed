#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "a1deg/arith.hpp"
#include "a1deg/bezout.hpp"
#include "a1deg/unipoly.hpp"

namespace a1deg::test {

/// Seed for randomized tests: --seed N on the command line, else the
/// A1DEG_TEST_SEED environment variable, else a fixed default.
std::uint64_t seed();

/// A generator derived from the run seed and a per-test salt.
std::mt19937_64 rng(std::uint64_t salt);

long uniform(std::mt19937_64& g, long lo, long hi);
Rational random_rational(std::mt19937_64& g, long bound, long max_den = 1);
Rational random_nonzero_rational(std::mt19937_64& g, long bound, long max_den = 1);
QPoly random_poly(std::mt19937_64& g, int degree, long bound, const std::string& var = "t");
/// A random map F/G with coprime F, G and max degree in [1, max_degree].
RationalMap random_map(std::mt19937_64& g, int max_degree, long bound);
/// A random admissible fiber of m, found by trying small integers.
Rational random_fiber(std::mt19937_64& g, const RationalMap& m);

}  // namespace a1deg::test
