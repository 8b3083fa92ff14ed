#include "a1deg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace a1deg {

namespace {

// ---- dense polynomials over F_p, p < 2^31, lowest degree first ----------

using Zp = std::vector<std::int64_t>;

void zp_trim(Zp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t zp_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = a % p, e = p - 2;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Zp zp_sub(const Zp& a, const Zp& b, std::int64_t p) {
  Zp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  zp_trim(r);
  return r;
}

Zp zp_mul(const Zp& a, const Zp& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Zp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  zp_trim(r);
  return r;
}

// Quotient and remainder; b nonzero.
std::pair<Zp, Zp> zp_divmod(Zp a, const Zp& b, std::int64_t p) {
  zp_trim(a);
  if (a.size() < b.size()) return {{}, a};
  Zp q(a.size() - b.size() + 1, 0);
  std::int64_t inv = zp_inv(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    std::int64_t c = a[i] * inv % p;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
  }
  a.resize(b.size() - 1);
  zp_trim(a);
  zp_trim(q);
  return {q, a};
}

Zp zp_mod(const Zp& a, const Zp& b, std::int64_t p) { return zp_divmod(a, b, p).second; }

Zp zp_monic(Zp a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = zp_inv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

Zp zp_gcd(Zp a, Zp b, std::int64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    Zp r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

// s, t with s*a + t*b = 1 for coprime a, b.
std::pair<Zp, Zp> zp_bezout(const Zp& a, const Zp& b, std::int64_t p) {
  Zp r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = zp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Zp s2 = zp_sub(s0, zp_mul(q, s1, p), p), t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t inv = zp_inv(r0.at(0), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

Zp zp_powmod(Zp base, const Integer& e, const Zp& m, std::int64_t p) {
  Zp result = {1};
  base = zp_mod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = zp_mod(zp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_mod(zp_mul(result, base, p), m, p);
  }
  return result;
}

Zp zp_derivative(const Zp& a, std::int64_t p) {
  Zp r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<std::int64_t>(i) % p);
  zp_trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Zp, int>> zp_ddf(Zp f, std::int64_t p) {
  std::vector<std::pair<Zp, int>> out;
  Zp x = {0, 1}, w = x;
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    w = zp_powmod(w, Integer(static_cast<long>(p)), f, p);
    Zp g = zp_gcd(zp_sub(w, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = zp_divmod(f, g, p).first;
      w = zp_mod(w, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void zp_edf(const Zp& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<Zp>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  for (;;) {
    Zp a(static_cast<std::size_t>(n), 0);
    for (auto& c : a) c = coef(rng);
    zp_trim(a);
    if (a.size() < 2) continue;
    Zp b = zp_sub(zp_powmod(a, e, f, p), {1}, p);
    Zp g = zp_gcd(b, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      zp_edf(g, d, p, rng, out);
      zp_edf(zp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- integer polynomials -------------------------------------------------

using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Zp z_reduce(const ZPoly& a, std::int64_t p) {
  Zp r;
  for (const auto& c : a) {
    Integer m = c % p;
    if (m < 0) m += p;
    r.push_back(m.get_si());
  }
  zp_trim(r);
  return r;
}

ZPoly z_from_zp(const Zp& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  z_trim(r);
  return r;
}

// Coefficients in [0, m), or symmetric in (-m/2, m/2].
ZPoly z_mod(const ZPoly& a, const Integer& m, bool symmetric = false) {
  ZPoly r;
  Integer half = m / 2;
  for (const auto& c : a) {
    Integer x = c % m;
    if (x < 0) x += m;
    if (symmetric && x > half) x -= m;
    r.push_back(x);
  }
  z_trim(r);
  return r;
}

Integer z_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly z_primitive(ZPoly a) {
  Integer g = z_content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

QPoly z_to_q(const ZPoly& a) {
  std::vector<Rational> v(a.begin(), a.end());
  return QPoly(Rational(0), std::move(v));
}

// Primitive integer polynomial with positive leading coefficient.
ZPoly q_to_primitive_z(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly r;
  for (const auto& c : f.coefficients()) {
    Rational v = c * l;
    r.push_back(v.get_num());
  }
  return z_primitive(r);
}

// Exact quotient a / b over Z if b | a.
bool z_exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.back() == 0) return false;
  if (a.front() != 0 && b.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t())) {
    return false;
  }
  auto [q, r] = z_to_q(a).divmod(z_to_q(b));
  if (!r.is_zero()) return false;
  quotient.clear();
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return false;
    quotient.push_back(c.get_num());
  }
  return true;
}

// One pair of factors f = g*h mod p^k, g monic, from f = g*h mod p.
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, std::int64_t p, int k) {
  auto [s, t] = zp_bezout(z_reduce(g, p), z_reduce(h, p), p);
  (void)s;
  Zp gp = z_reduce(g, p);
  Integer pj = static_cast<long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly diff = f;
    ZPoly gh = z_mul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) c /= pj;
    z_trim(diff);
    Zp e = z_reduce(diff, p);
    Zp dg = zp_mod(zp_mul(e, t, p), gp, p);
    Zp dh = zp_divmod(zp_sub(e, zp_mul(dg, z_reduce(h, p), p), p), gp, p).first;
    ZPoly zdg = z_from_zp(dg), zdh = z_from_zp(dh);
    g.resize(std::max(g.size(), zdg.size()), 0);
    h.resize(std::max(h.size(), zdh.size()), 0);
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += pj * zdg[i];
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += pj * zdh[i];
    pj *= p;
    g = z_mod(g, pj);
    h = z_mod(h, pj);
  }
}

// Lift the monic modular factors of f (leading coefficient lc(f)) to p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Zp>& factors, std::int64_t p, int k) {
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  const Integer& lc = f.back();
  if (factors.size() == 1) {
    Integer inv;
    Integer lcm = lc % pk;
    if (lcm < 0) lcm += pk;
    mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    return {z_mod(g, pk)};
  }
  ZPoly g = z_from_zp(factors[0]);
  ZPoly h = {lc};
  for (std::size_t i = 1; i < factors.size(); ++i) h = z_mul(h, z_from_zp(factors[i]));
  Integer lc_h = h.back();
  h = z_mod(h, Integer(static_cast<long>(p)));
  h.resize(factors.size() > 1 ? h.size() : h.size());
  // Keep the exact leading coefficient so lc(g*h) = lc(f) throughout.
  std::size_t deg_h = f.size() - g.size();
  h.resize(deg_h + 1, 0);
  h[deg_h] = lc_h;
  hensel_lift_pair(f, g, h, p, k);
  std::vector<ZPoly> out = {g};
  std::vector<Zp> rest(factors.begin() + 1, factors.end());
  for (auto& u : hensel_lift(z_mod(h, pk), rest, p, k)) out.push_back(std::move(u));
  return out;
}

std::int64_t next_prime(std::int64_t p) {
  do {
    ++p;
  } while (!is_prime(Integer(static_cast<long>(p))));
  return p;
}

// Irreducible factors of a primitive squarefree integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& h0, std::uint64_t seed) {
  const int n = static_cast<int>(h0.size()) - 1;
  if (n <= 1) return {h0};

  // Choose, among a few good primes, one giving the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<Zp> best_factors;
  std::mt19937_64 rng(seed);
  int good = 0;
  for (std::int64_t p = 3; good < 5; p = next_prime(p)) {
    if (mpz_divisible_ui_p(h0.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    Zp hp = z_reduce(h0, p);
    if (zp_gcd(hp, zp_derivative(hp, p), p).size() != 1) continue;
    ++good;
    std::vector<Zp> facs;
    for (auto& [g, d] : zp_ddf(zp_monic(hp, p), p)) zp_edf(g, d, p, rng, facs);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) return {h0};
  }
  std::sort(best_factors.begin(), best_factors.end());
  const std::int64_t p = best_p;

  // Factor coefficient bound: 2^n * ||h||_2 * |lc|; lift past twice that.
  Integer norm2 = 0;
  for (const auto& c : h0) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * abs(h0.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  int k = 1;
  Integer pk = static_cast<long>(p);
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(h0, best_factors, p, k);

  std::vector<ZPoly> result;
  ZPoly h = h0;
  std::vector<int> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<int> pick(s);
    // Enumerate s-subsets of `remaining` in lexicographic order.
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ZPoly g = {h.back()};
      for (std::size_t i : idx) g = z_mod(z_mul(g, lifted[remaining[i]]), pk, true);
      g = z_primitive(g);
      ZPoly quotient;
      if (g.size() > 1 && z_exact_divide(h, g, quotient)) {
        result.push_back(g);
        h = quotient;
        std::vector<int> next;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
        }
        remaining = std::move(next);
        found = true;
        break;
      }
      // Advance to the next combination.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (h.size() > 1) result.push_back(z_primitive(h));
  return result;
}

bool coefficient_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

}  // namespace

QPoly Factorization::expand() const {
  QPoly r = QPoly::constant(unit);
  for (const auto& [g, e] : factors) r *= g.pow(static_cast<unsigned>(e));
  return r;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  QPoly monic = f.monic();
  if (monic.degree() == 0) return out;
  QPoly a = gcd(monic, monic.derivative());
  QPoly b = monic / a;
  QPoly c = monic.derivative() / a;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(g, i);
  }
  return out;
}

bool is_squarefree(const QPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

Factorization factor_over_q(const QPoly& f) {
  if (f.is_zero()) throw DomainError("factor_over_q: zero polynomial");
  if (f.degree() > kMaxFactorDegree) {
    throw DomainError("factor_over_q: degree " + std::to_string(f.degree()) + " exceeds the cap of " +
                      std::to_string(kMaxFactorDegree));
  }
  Factorization out{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    ZPoly z = q_to_primitive_z(part);
    // Seed from the degree so results are reproducible.
    for (const ZPoly& g : factor_squarefree_z(z, 0x5eed + static_cast<std::uint64_t>(z.size()))) {
      out.factors.emplace_back(z_to_q(g).monic().with_var(f.var()), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return coefficient_less(a.first, b.first); });
  return out;
}

bool is_irreducible_over_q(const QPoly& f) {
  if (f.degree() < 1) return false;
  Factorization fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace a1deg
