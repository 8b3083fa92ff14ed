#include "support.hpp"

#include <cstdlib>
#include <string>

namespace a1deg::test {

namespace {
std::uint64_t g_seed = 20240611;
bool g_seed_set = false;
}  // namespace

std::uint64_t seed() {
  if (!g_seed_set) {
    if (const char* env = std::getenv("A1DEG_TEST_SEED")) g_seed = std::stoull(env);
    g_seed_set = true;
  }
  return g_seed;
}

std::mt19937_64 rng(std::uint64_t salt) {
  std::seed_seq seq{seed(), salt};
  return std::mt19937_64(seq);
}

long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

Rational random_rational(std::mt19937_64& g, long bound, long max_den) {
  Rational q(uniform(g, -bound, bound), uniform(g, 1, max_den));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(std::mt19937_64& g, long bound, long max_den) {
  for (;;) {
    Rational q = random_rational(g, bound, max_den);
    if (sgn(q) != 0) return q;
  }
}

QPoly random_poly(std::mt19937_64& g, int degree, long bound, const std::string& var) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Rational(uniform(g, -bound, bound)));
  while (sgn(c.back()) == 0) c.back() = Rational(uniform(g, -bound, bound));
  return QPoly(Rational(0), std::move(c), var);
}

RationalMap random_map(std::mt19937_64& g, int max_degree, long bound) {
  for (;;) {
    int df = static_cast<int>(uniform(g, 0, max_degree));
    int dg = static_cast<int>(uniform(g, 0, max_degree));
    if (std::max(df, dg) == 0) continue;
    QPoly f = random_poly(g, df, bound), h = random_poly(g, dg, bound);
    if (gcd(f, h).degree() > 0) continue;
    return RationalMap(f, h);
  }
}

Rational random_fiber(std::mt19937_64& g, const RationalMap& m) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Rational q = random_rational(g, 9, 3);
    QPoly h = m.numerator() - m.denominator() * q;
    if (h.degree() == m.degree()) return q;
  }
  throw std::runtime_error("no admissible fiber");
}

}  // namespace a1deg::test
