#pragma once

#include <utility>
#include <vector>

#include "a1deg/unipoly.hpp"

namespace a1deg {

inline constexpr int kMaxFactorDegree = 24;

/// f = unit * prod(factor^multiplicity), factors monic, irreducible over Q,
/// pairwise distinct, ordered by degree and then by coefficient sequence.
struct Factorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;

  QPoly expand() const;
};

/// Complete factorization over Q by modular factorization, Hensel lifting
/// and subset recombination (Zassenhaus). Degree is capped at 24.
Factorization factor_over_q(const QPoly& f);

/// Yun's squarefree decomposition of a nonzero polynomial: pairs
/// (monic squarefree part, multiplicity), parts pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

bool is_squarefree(const QPoly& f);
bool is_irreducible_over_q(const QPoly& f);

}  // namespace a1deg
