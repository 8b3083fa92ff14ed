#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "a1deg/multipoly.hpp"

namespace a1deg {

inline constexpr std::size_t kMaxGroebnerVariables = 4;

namespace detail {

inline bool exponent_divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool exponents_coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

template <class K>
MultiPoly<K> make_monic(const MultiPoly<K>& p) {
  return p * inverse(p.leading_coefficient());
}

}  // namespace detail

/// Full reduction of p modulo g (lex order).
template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& g) {
  MultiPoly<K> rem = p.zero();
  MultiPoly<K> work = p;
  while (!work.is_zero()) {
    const Exponent lead = work.leading_exponent();
    const K lc = work.leading_coefficient();
    bool reduced = false;
    for (const auto& h : g) {
      if (detail::exponent_divides(h.leading_exponent(), lead)) {
        Exponent s = detail::exponent_sub(lead, h.leading_exponent());
        work -= h.shifted(s) * (lc * inverse(h.leading_coefficient()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lead, lc);
      MultiPoly<K> t = MultiPoly<K>::monomial(lc, lead, work.vars());
      work -= t;
    }
  }
  return rem;
}

/// Reduced lex Groebner basis, monic, sorted by ascending leading exponent.
/// Buchberger's algorithm with the product and chain criteria.
template <class K>
std::vector<MultiPoly<K>> groebner_basis(const std::vector<MultiPoly<K>>& gens) {
  std::vector<MultiPoly<K>> g;
  for (const auto& f : gens) {
    if (f.nvars() > kMaxGroebnerVariables) {
      throw DomainError("groebner_basis: at most " + std::to_string(kMaxGroebnerVariables) + " variables are supported");
    }
    if (!f.is_zero()) g.push_back(detail::make_monic(f));
  }
  if (g.empty()) return g;

  std::set<std::pair<std::size_t, std::size_t>> pairs, done;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});
  }
  auto processed = [&](std::size_t a, std::size_t b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    done.insert({i, j});
    const Exponent& li = g[i].leading_exponent();
    const Exponent& lj = g[j].leading_exponent();
    if (detail::exponents_coprime(li, lj)) continue;
    Exponent l = detail::exponent_lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = detail::exponent_divides(g[k].leading_exponent(), l) && processed(i, k) && processed(j, k);
    }
    if (chain) continue;
    MultiPoly<K> s = g[i].shifted(detail::exponent_sub(l, li)) - g[j].shifted(detail::exponent_sub(l, lj));
    MultiPoly<K> r = normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(detail::make_monic(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.insert({k, g.size() - 1});
  }

  // Minimalize, then inter-reduce.
  std::vector<MultiPoly<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Exponent& lk = g[k].leading_exponent();
      const Exponent& lii = g[i].leading_exponent();
      if (detail::exponent_divides(lk, lii) && (lk != lii || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<K>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const K lc = minimal[i].leading_coefficient();
    const Exponent lead = minimal[i].leading_exponent();
    MultiPoly<K> tail = minimal[i] - MultiPoly<K>::monomial(lc, lead, minimal[i].vars());
    MultiPoly<K> r = normal_form(tail, others);
    r.add_term(lead, lc);
    reduced.push_back(detail::make_monic(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const auto& a, const auto& b) { return a.leading_exponent() < b.leading_exponent(); });
  return reduced;
}

/// Monomials outside the leading-term ideal, ascending in lex order. Throws
/// DomainError if the quotient is infinite-dimensional.
template <class K>
std::vector<Exponent> quotient_basis(const std::vector<MultiPoly<K>>& gb) {
  if (gb.empty()) throw DomainError("not zero-dimensional: the ideal is zero");
  const std::size_t n = gb.front().nvars();
  // Each variable needs a pure power among the leading monomials.
  Exponent bound(n, -1);
  for (const auto& h : gb) {
    const Exponent& e = h.leading_exponent();
    std::size_t nonzero = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) {
        ++nonzero;
        which = i;
      }
    }
    if (nonzero == 0) return {};  // the unit ideal
    if (nonzero == 1 && (bound[which] < 0 || e[which] < bound[which])) bound[which] = e[which];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] < 0) throw DomainError("not zero-dimensional: zero set not isolated");
  }
  std::vector<Exponent> out;
  Exponent e(n, 0);
  while (true) {
    bool standard = true;
    for (const auto& h : gb) {
      if (detail::exponent_divides(h.leading_exponent(), e)) {
        standard = false;
        break;
      }
    }
    if (standard) out.push_back(e);
    std::size_t i = n;
    bool carry = true;
    while (carry && i > 0) {
      --i;
      if (++e[i] < bound[i]) {
        carry = false;
      } else {
        e[i] = 0;
      }
    }
    if (carry) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether every coordinate acts nilpotently on the quotient, i.e. the zero
/// set is the origin alone.
template <class K>
bool is_local_at_origin(const std::vector<MultiPoly<K>>& gb) {
  const std::size_t dim = quotient_basis(gb).size();
  if (dim == 0) return false;
  const std::size_t n = gb.front().nvars();
  const K one = one_like(gb.front().zero_scalar());
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = static_cast<int>(dim);
    if (!normal_form(MultiPoly<K>::monomial(one, e, gb.front().vars()), gb).is_zero()) return false;
  }
  return true;
}

}  // namespace a1deg
