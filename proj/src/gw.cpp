#include "a1deg/gw.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace a1deg {

namespace {

// Square class of a*b for squarefree a, b.
Integer squarefree_product(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return (a / g) * (b / g);
}

// Primes reaching here come from factorizations; skip the primality test.
const Place& place_of(const Integer& p) {
  thread_local std::map<Integer, Place> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, Place::prime(p)).first;
  return it->second;
}

int hilbert(const Integer& a, const Integer& b, const Integer& p) {
  return hilbert_symbol(Rational(a), Rational(b), place_of(p));
}

Integer fp_class(const Rational& q, std::int64_t p) {
  ModP x = ModP::from_rational(q, p);
  if (x.value() == 0) throw DomainError("square class: " + to_string(q) + " is not a unit mod " + std::to_string(p));
  Integer pp = static_cast<long>(p);
  return legendre_symbol(Integer(static_cast<long>(x.value())), pp) == 1 ? Integer(1) : least_nonresidue(pp);
}

Integer fp_product(const Integer& a, const Integer& b, std::int64_t p) {
  return fp_class(Rational(a * b), p);
}

// Ordering used for display: <1>, <-1>, then by |d| with positive first.
bool display_less(const Integer& a, const Integer& b) {
  auto key = [](const Integer& x) {
    if (x == 1) return 0;
    if (x == -1) return 1;
    return 2;
  };
  if (key(a) != key(b)) return key(a) < key(b);
  Integer aa = abs(a), ab = abs(b);
  if (aa != ab) return aa < ab;
  return a > b;
}

bool is_squarefree_small(unsigned long k) {
  for (unsigned long d = 2; d * d <= k; ++d) {
    if (k % (d * d) == 0) return false;
  }
  return true;
}

using Count = GWClass::Count;

// Invariants of a form over Q during canonical reduction.
struct Invariants {
  Count n;
  Count s;
  Integer d;
  std::map<Integer, int> eps;  // over a support containing 2, primes(d) and every p with eps_p = -1

  void extend_support(const Integer& a) {
    for (const Integer& p : prime_divisors(a)) eps.try_emplace(p, 1);
  }

  bool isotropic() const {
    if (n < 2 || (s < 0 ? -s : s) == n) return false;
    if (n == 2) return d == -1;
    if (n == 3) {
      for (const auto& [p, e] : eps) {
        if (hilbert(Integer(-1), Integer(-d), p) != e) return false;
      }
      return true;
    }
    if (n == 4) {
      for (const auto& [p, e] : eps) {
        if (is_square_in_qp(Rational(d), p) && e != hilbert(Integer(-1), Integer(-1), p)) return false;
      }
      return true;
    }
    return true;
  }

  // Whether the form represents the squarefree integer a. The support must
  // already contain primes(a).
  bool represents(const Integer& a) const {
    if (s == n && a < 0) return false;
    if (s == -n && a > 0) return false;
    if (n == 1) return a == d;
    if (n == 2) {
      for (const auto& [p, e] : eps) {
        if (hilbert(a, Integer(-d), p) != e) return false;
      }
      return true;
    }
    if (n == 3) {
      for (const auto& [p, e] : eps) {
        if (is_square_in_qp(Rational(-a * d), p) && hilbert(Integer(-1), Integer(-d), p) != e) return false;
      }
      return true;
    }
    return true;
  }

  // Two hyperbolic planes (or two copies of <-1>) leave d alone and multiply
  // each eps_p by (-1, -1)_p.
  void drop_pairs(Count k) {
    if (k % 2 != 0) eps[Integer(2)] *= -1;
  }

  void split_hyperbolic() {
    n -= 2;
    d = -d;
    for (auto& [p, e] : eps) e *= hilbert(Integer(-1), d, p);
  }

  void split_unit(const Integer& a) {
    n -= 1;
    s -= a > 0 ? 1 : -1;
    d = squarefree_product(d, a);
    for (auto& [p, e] : eps) e *= hilbert(a, d, p);
  }
};

constexpr unsigned long kBinarySearchBound = 4096;

// Whether the binary form with invariants inv represents the squarefree a:
// (a, -d)_p = eps_p at every place.
bool binary_represents(const Invariants& inv, const Integer& a) {
  if (inv.s == 2 && a < 0) return false;
  if (inv.s == -2 && a > 0) return false;
  const Integer minus_d = -inv.d;
  for (const auto& [p, e] : inv.eps) {
    if (hilbert(a, minus_d, p) != e) return false;
  }
  for (const Integer& p : prime_divisors(a)) {
    if (!inv.eps.count(p) && hilbert(a, minus_d, p) != 1) return false;
  }
  return true;
}

// a with <a> + <ad> in the class of a binary form. The smallest |a| up to
// kBinarySearchBound, else a = (+-) prod(S) * q from a linear system over F_2,
// where S = {2} + primes(d) + {p : eps_p = -1} and q is the least prime
// outside S that splits in Q(sqrt(-d)) and makes the system solvable.
Integer binary_leading_entry(const Invariants& inv) {
  for (unsigned long k = 1; k <= kBinarySearchBound; ++k) {
    if (!is_squarefree_small(k)) continue;
    for (int sign : {1, -1}) {
      Integer a = Integer(k) * sign;
      if (binary_represents(inv, a)) return a;
    }
  }
  std::set<Integer> support = {Integer(2)};
  for (const Integer& p : prime_divisors(inv.d)) support.insert(p);
  for (const auto& [p, e] : inv.eps) {
    if (e == -1) support.insert(p);
  }
  const std::vector<Integer> primes(support.begin(), support.end());
  const Integer minus_d = -inv.d;
  // Generators -1, p_1, ..., p_m; rows are the places in S and infinity.
  std::vector<Integer> gens = {Integer(-1)};
  gens.insert(gens.end(), primes.begin(), primes.end());
  const std::size_t cols = gens.size();
  auto bit = [](int symbol) { return symbol == -1 ? 1 : 0; };
  auto target_at = [&inv](const Integer& p) {
    auto it = inv.eps.find(p);
    return it == inv.eps.end() ? 1 : it->second;
  };
  auto row_for = [&](const Integer& q, const std::optional<Integer>& p) {
    std::vector<int> row(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = p ? bit(hilbert(gens[j], minus_d, *p)) : (gens[j] < 0 && minus_d < 0);
    }
    if (p) {
      row[cols] = bit(target_at(*p)) ^ bit(hilbert(q, minus_d, *p));
    } else {
      int want = inv.s == -2 ? -1 : 1;
      if (inv.s == 0) want = 1;
      row[cols] = minus_d < 0 ? bit(want) : 0;
    }
    return row;
  };
  auto solve = [&](const Integer& q) -> std::optional<Integer> {
    std::vector<std::vector<int>> m;
    for (const Integer& p : primes) m.push_back(row_for(q, p));
    m.push_back(row_for(q, std::nullopt));
    if (inv.s == 2 || inv.s == -2) {
      // Fix the sign bit: a > 0 exactly when the form is positive definite.
      std::vector<int> sign_row(cols + 1, 0);
      sign_row[0] = 1;
      sign_row[cols] = inv.s == -2;
      m.push_back(std::move(sign_row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && !m[piv][c]) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[r], m[piv]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != r && m[i][c]) {
          for (std::size_t j = c; j <= cols; ++j) m[i][j] ^= m[r][j];
        }
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][cols]) return std::nullopt;
    }
    Integer a = q;
    for (std::size_t i = 0; i < r; ++i) {
      if (m[i][cols]) a *= gens[pivot_col[i]];
    }
    return a;
  };
  if (auto a = solve(Integer(1))) return *a;
  for (Integer q = 3;; q += 2) {
    if (support.count(q) || !is_prime(q)) continue;
    if (legendre_symbol(minus_d, q) != 1) continue;
    if (auto a = solve(q)) return *a;
  }
}

std::map<Integer, Count> canonical_rational(const GWClass& x) {
  Invariants inv{x.rank(), x.signature(), x.discriminant(), x.hasse()};
  inv.eps.try_emplace(Integer(2), 1);
  std::map<Integer, Count> out;
  // Indefinite forms of rank >= 5 are isotropic, so planes split off in bulk.
  const Count abs_s = inv.s < 0 ? -inv.s : inv.s;
  Count bulk = std::min((inv.n - 5) / 4, (inv.n - abs_s - 2) / 4);
  Count h = 0;
  if (bulk > 0) {
    inv.n -= 4 * bulk;
    inv.drop_pairs(bulk);
    h = 2 * bulk;
  }
  while (inv.isotropic()) {
    inv.split_hyperbolic();
    ++h;
  }
  if (h > 0) {
    out[Integer(1)] += h;
    out[Integer(-1)] += h;
  }
  // What remains is anisotropic or definite. Definite forms of rank >= 5
  // represent <1> (resp. <-1>) repeatedly.
  if (inv.n >= 5 && inv.s == inv.n) {
    // Splitting <1> changes neither d nor eps.
    Count k = inv.n - 4;
    inv.n -= k;
    inv.s -= k;
    out[Integer(1)] += k;
  } else if (inv.n >= 5 && inv.s == -inv.n) {
    Count k = (inv.n - 3) / 2;
    inv.n -= 2 * k;
    inv.s += 2 * k;
    inv.drop_pairs(k);
    out[Integer(-1)] += 2 * k;
  }
  while (inv.n > 0) {
    if (inv.n == 1) {
      out[inv.d] += 1;
      break;
    }
    if (inv.n == 2) {
      Integer a = binary_leading_entry(inv);
      out[a] += 1;
      out[squarefree_product(a, inv.d)] += 1;
      break;
    }
    bool found = false;
    for (unsigned long k = 1; !found; ++k) {
      if (!is_squarefree_small(k)) continue;
      for (int sign : {1, -1}) {
        Integer a = Integer(k) * sign;
        Invariants trial = inv;
        if (k > 1) trial.extend_support(a);
        if (trial.represents(a)) {
          trial.split_unit(a);
          inv = std::move(trial);
          out[a] += 1;
          found = true;
          break;
        }
      }
    }
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("GW class rank overflows 64 bits");
  return r;
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("GW class rank overflows 64 bits");
  return r;
}

const char* kLeft = "⟨";
const char* kRight = "⟩";
const char* kMinus = "−";

std::string bracket(const Integer& a, bool ascii) {
  std::string digits = Integer(abs(a)).get_str();
  std::string sign = a < 0 ? (ascii ? "-" : kMinus) : "";
  return ascii ? "<" + sign + digits + ">" : kLeft + sign + digits + kRight;
}

}  // namespace

BaseField BaseField::prime_field(std::int64_t p) {
  require_odd_prime_modulus(p);
  return BaseField(p);
}

std::string BaseField::to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

BaseField BaseField::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.rfind("F", 0) == 0) {
    digits = text.substr(1);
  }
  if (digits.empty() || digits.size() > 18 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw ParseError("unknown field '" + text + "' (expected Q or Fp:<p>)", 0);
  }
  return prime_field(std::stoll(digits));
}

GWClass::GWClass(BaseField field) : field_(field) { compute_invariants(); }

GWClass::GWClass(BaseField field, const std::vector<Rational>& entries) : field_(field) {
  for (const Rational& q : entries) {
    if (sgn(q) == 0) throw DomainError("square class: not a unit");
    counts_[field_.is_rational() ? squarefree_part(q) : fp_class(q, field_.characteristic())] += 1;
  }
  compute_invariants();
}

GWClass::GWClass(BaseField field, std::map<Integer, Count> counts, FromCounts) : field_(field), counts_(std::move(counts)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second < 0) throw DomainError("GW class: negative multiplicity");
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
  compute_invariants();
}

GWClass GWClass::unit(BaseField field, const Rational& a) { return GWClass(field, std::vector<Rational>{a}); }

GWClass GWClass::hyperbolic(BaseField field, Count m) {
  if (m < 0) throw DomainError("hyperbolic: negative multiple");
  std::map<Integer, Count> c;
  // Over F_p, <-1> is the class of -1 mod p.
  c[Integer(1)] += m;
  c[field.is_rational() ? Integer(-1) : fp_class(Rational(-1), field.characteristic())] += m;
  return GWClass(field, std::move(c), FromCounts{});
}

std::vector<Integer> GWClass::diagonal() const {
  if (rank_ > kMaxExpandedRank) {
    throw DomainError("diagonal of rank " + std::to_string(rank_) + " is too large to expand");
  }
  std::vector<Integer> v;
  for (const auto& [a, c] : counts_) v.insert(v.end(), static_cast<std::size_t>(c), a);
  return v;
}

void GWClass::compute_invariants() {
  rank_ = 0;
  signature_ = 0;
  disc_ = 1;
  hasse_.clear();
  for (const auto& [a, c] : counts_) rank_ = checked_add(rank_, c);
  if (!field_.is_rational()) {
    for (const auto& [a, c] : counts_) {
      if (c % 2 != 0) disc_ = fp_product(disc_, a, field_.characteristic());
    }
    return;
  }
  std::set<Integer> support{Integer(2)};
  for (const auto& [a, c] : counts_) {
    signature_ += a > 0 ? c : -c;
    if (abs(a) != 1) {
      for (const Integer& p : prime_divisors(a)) support.insert(p);
    }
  }
  // prod_{i<j} (a_i, a_j) = prod_j (a_1 ... a_{j-1}, a_j). A block of c copies
  // of a after prefix P contributes (P, a)^c (a, a)^(c(c-1)/2).
  for (const Integer& p : support) {
    int e = 1;
    Integer prefix = 1;
    for (const auto& [a, c] : counts_) {
      if (c % 2 != 0) e *= hilbert(prefix, a, p);
      Count pairs = (c % 4 == 2 || c % 4 == 3) ? 1 : 0;  // parity of c(c-1)/2
      if (pairs) e *= hilbert(a, a, p);
      if (c % 2 != 0) prefix = squarefree_product(prefix, a);
    }
    hasse_[p] = e;
  }
  for (const auto& [a, c] : counts_) {
    if (c % 2 != 0) disc_ = squarefree_product(disc_, a);
  }
}

int GWClass::hasse_at(const Integer& p) const {
  auto it = hasse_.find(p);
  return it == hasse_.end() ? 1 : it->second;
}

void GWClass::check_field(const GWClass& o) const {
  if (field_ != o.field_) {
    throw DomainError("GW classes over different fields: " + field_.to_string() + " and " + o.field_.to_string());
  }
}

GWClass GWClass::operator+(const GWClass& o) const {
  check_field(o);
  std::map<Integer, Count> c = counts_;
  for (const auto& [a, k] : o.counts_) c[a] = checked_add(c[a], k);
  return GWClass(field_, std::move(c), FromCounts{});
}

GWClass GWClass::operator*(const GWClass& o) const {
  check_field(o);
  std::map<Integer, Count> c;
  for (const auto& [a, ka] : counts_) {
    for (const auto& [b, kb] : o.counts_) {
      Integer ab = field_.is_rational() ? squarefree_product(a, b) : fp_product(a, b, field_.characteristic());
      c[ab] = checked_add(c[ab], checked_mul(ka, kb));
    }
  }
  return GWClass(field_, std::move(c), FromCounts{});
}

GWClass operator*(GWClass::Count m, const GWClass& x) {
  if (m < 0) throw DomainError("GW multiple: negative coefficient");
  std::map<Integer, GWClass::Count> c;
  for (const auto& [a, k] : x.counts_) c[a] = checked_mul(k, m);
  return GWClass(x.field_, std::move(c), GWClass::FromCounts{});
}

bool GWClass::operator==(const GWClass& o) const {
  check_field(o);
  if (rank_ != o.rank_ || disc_ != o.disc_) return false;
  if (!field_.is_rational()) return true;
  if (signature_ != o.signature_) return false;
  for (const auto& [p, e] : hasse_) {
    if (o.hasse_at(p) != e) return false;
  }
  for (const auto& [p, e] : o.hasse_) {
    if (hasse_at(p) != e) return false;
  }
  return true;
}

std::optional<GWClass::Count> GWClass::hyperbolic_multiple() const {
  if (rank_ % 2 != 0) return std::nullopt;
  if (*this == hyperbolic(field_, rank_ / 2)) return rank_ / 2;
  return std::nullopt;
}

GWClass GWClass::canonical() const {
  if (!field_.is_rational()) {
    std::map<Integer, Count> c;
    if (rank_ > 0) {
      c[Integer(1)] += rank_ - 1;
      c[disc_] += 1;
    }
    return GWClass(field_, std::move(c), FromCounts{});
  }
  return GWClass(field_, canonical_rational(*this), FromCounts{});
}

std::string GWClass::display(bool ascii) const {
  if (rank_ == 0) return "0";
  const std::string h = ascii ? "<1> + <-1>" : std::string(kLeft) + "1" + kRight + " + " + kLeft + kMinus + "1" + kRight;
  if (auto m = hyperbolic_multiple()) return *m == 1 ? h : std::to_string(*m) + "(" + h + ")";
  const GWClass c = canonical();
  std::vector<std::pair<Integer, Count>> v(c.counts_.begin(), c.counts_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
  std::string out;
  for (const auto& [a, k] : v) {
    if (!out.empty()) out += " + ";
    if (k > 1) out += std::to_string(k);
    out += bracket(a, ascii);
  }
  return out;
}

GWClass diagonalize(const SymmetricForm<Rational>& m) {
  return GWClass(BaseField::rationals(), diagonal_entries(m));
}

GWClass diagonalize(const SymmetricForm<ModP>& m) {
  if (m.size() == 0) throw DomainError("diagonalize: empty form over F_p needs an explicit field");
  std::int64_t p = m(0, 0).modulus();
  std::vector<Rational> v;
  for (const ModP& x : diagonal_entries(m)) v.emplace_back(static_cast<long>(x.value()));
  return GWClass(BaseField::prime_field(p), v);
}

Matrix<Rational> antidiagonal_hankel(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) m[i][j] = a[i + j];
  }
  return m;
}

GWClass antidiagonal_class(BaseField field, const std::vector<Rational>& a) {
  if (a.empty() || sgn(a.back()) == 0) throw DomainError("antidiagonal_class: A_n must be nonzero");
  const int n = static_cast<int>(a.size());
  GWClass h = GWClass::hyperbolic(field, n / 2);
  if (n % 2 == 0) return h;
  return GWClass::unit(field, a.back()) + h;
}

Matrix<Rational> trace_form(const FieldPtr& field, const Matrix<NFElement>& gram) {
  const std::size_t n = gram.size();
  const std::size_t d = static_cast<std::size_t>(field->degree());
  Matrix<Rational> out(n * d, std::vector<Rational>(n * d, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // Traces of gram[i][j] * theta^k for k < 2d - 1.
      std::vector<Rational> t;
      NFElement x = gram[i][j];
      for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
        t.push_back(trace_of_element(x));
        x = x.times_generator();
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          out[i * d + a][j * d + b] = t[a + b];
          out[j * d + b][i * d + a] = t[a + b];
        }
      }
    }
  }
  return out;
}

GWClass transfer_trace(const FieldPtr& field, const Matrix<NFElement>& gram) {
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) throw DomainError("transfer_trace: gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw DomainError("transfer_trace: gram matrix is not symmetric");
    }
  }
  return diagonalize(SymmetricForm<Rational>(trace_form(field, gram)));
}

}  // namespace a1deg
