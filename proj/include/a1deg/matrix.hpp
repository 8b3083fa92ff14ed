#pragma once

#include <string>
#include <vector>

#include "a1deg/error.hpp"
#include "a1deg/unipoly.hpp"

namespace a1deg {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Exact symmetric matrix over a field.
template <class K>
class SymmetricForm {
 public:
  explicit SymmetricForm(Matrix<K> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n) throw DomainError("symmetric form: matrix is not square");
      for (std::size_t j = 0; j < i; ++j) {
        if (entries_[i][j] != entries_[j][i]) {
          throw DomainError("symmetric form: entries (" + std::to_string(i) + "," + std::to_string(j) +
                            ") and (" + std::to_string(j) + "," + std::to_string(i) + ") differ");
        }
      }
    }
  }

  std::size_t size() const { return entries_.size(); }
  const K& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const Matrix<K>& entries() const { return entries_; }

 private:
  Matrix<K> entries_;
};

/// Diagonal entries of a form isometric to m, by symmetric Gaussian
/// elimination. A block with zero diagonal contributes a hyperbolic plane,
/// emitted as the pair (1, -1). Degenerate input is a DomainError.
template <class K>
std::vector<K> diagonal_entries(const SymmetricForm<K>& m) {
  Matrix<K> a = m.entries();
  const std::size_t n = a.size();
  std::vector<bool> live(n, true);
  std::vector<K> out;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i) {
      if (live[i] && !detail::is_zero_scalar(a[i][i])) piv = i;
    }
    if (piv != n) {
      const K inv = inverse(a[piv][piv]);
      for (std::size_t j = 0; j < n; ++j) {
        if (!live[j] || j == piv || detail::is_zero_scalar(a[j][piv])) continue;
        const K f = a[j][piv] * inv;
        for (std::size_t k = 0; k < n; ++k) {
          if (live[k] && k != piv) a[j][k] = a[j][k] - f * a[piv][k];
        }
      }
      out.push_back(a[piv][piv]);
      live[piv] = false;
      --remaining;
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!live[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (live[j] && !detail::is_zero_scalar(a[i][j])) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      throw DomainError("degenerate form: radical of dimension " + std::to_string(remaining));
    }
    // Schur complement of the block [[0, c], [c, 0]].
    const K inv = inverse(a[pi][pj]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!live[k] || k == pi || k == pj) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!live[l] || l == pi || l == pj) continue;
        a[k][l] = a[k][l] - (a[k][pi] * a[pj][l] + a[k][pj] * a[pi][l]) * inv;
      }
    }
    const K one = one_like(a[pi][pj]);
    out.push_back(one);
    out.push_back(-one);
    live[pi] = live[pj] = false;
    remaining -= 2;
  }
  return out;
}

/// Determinant by fraction-free elimination over a field.
template <class K>
K determinant(Matrix<K> a, const K& zero) {
  const std::size_t n = a.size();
  K det = one_like(zero);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && detail::is_zero_scalar(a[p][c])) ++p;
    if (p == n) return zero;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const K inv = inverse(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (detail::is_zero_scalar(a[r][c])) continue;
      const K f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
  if (a.empty()) return a;
  Matrix<K> t(a[0].size(), std::vector<K>(a.size(), a[0][0]));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

template <class K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b, const K& zero) {
  Matrix<K> c(a.size(), std::vector<K>(b.empty() ? 0 : b[0].size(), zero));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (detail::is_zero_scalar(a[i][k])) continue;
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  }
  return c;
}

}  // namespace a1deg
