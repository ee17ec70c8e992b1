#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "plabica/polynomial.hpp"
#include "plabica/subsets.hpp"

namespace plabica {

/// Variable id of the Plücker coordinate p_J (its bitmask; J is nonempty).
inline VarId plucker_var(const KSubset& J) { return J.mask(); }
inline constexpr VarId kQVar = 0;
/// Variable id of entry (r, c) of a generic matrix, 0-based.
inline VarId matrix_entry_var(int r, int c) {
  return (VarId{1} << 63) | (static_cast<VarId>(r) << 8) | static_cast<VarId>(c);
}
inline bool is_matrix_entry_var(VarId v) { return (v >> 63) != 0; }

/// Exact determinant by Gaussian elimination over the rationals.
inline mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Determinant of a square integer matrix (exact).
inline mpz_class integer_determinant(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) {
    std::vector<mpq_class> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    a.push_back(std::move(r));
  }
  const mpq_class d = determinant(std::move(a));
  return d.get_num();
}

/// A point of Gr(n-k, n): an (n-k) x n matrix with exact rational entries.
class GrassmannPoint {
 public:
  GrassmannPoint(int k, int n, std::vector<std::vector<mpq_class>> rows) : k_(k), n_(n), rows_(std::move(rows)) {
    require(static_cast<int>(rows_.size()) == n - k, "Grassmann point needs n-k rows");
    for (const auto& r : rows_) require(static_cast<int>(r.size()) == n, "Grassmann point rows need n entries");
  }

  /// Random integer matrix with entries in [-9, 9], resampled until all
  /// frozen minors and the given extra minors are nonzero.
  static GrassmannPoint random(int k, int n, std::mt19937_64& rng, const std::vector<KSubset>& nonzero = {}) {
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(n - k), std::vector<mpq_class>(static_cast<std::size_t>(n)));
      for (auto& r : rows)
        for (auto& x : r) x = dist(rng);
      GrassmannPoint p(k, n, std::move(rows));
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) ok = p.plucker(frozen_right_label(i, k, n)) != 0;
      for (const auto& J : nonzero)
        if (ok) ok = p.plucker(J) != 0;
      if (ok) return p;
    }
    throw InternalError("could not sample a point with nonvanishing minors");
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<std::vector<mpq_class>>& rows() const { return rows_; }

  /// Maximal minor with column set J.
  mpq_class plucker(const KSubset& J) const {
    require(J.n() == n_ && J.size() == n_ - k_, "Plücker coordinate needs an (n-k)-subset");
    auto it = cache_.find(J.mask());
    if (it != cache_.end()) return it->second;
    std::vector<std::vector<mpq_class>> sub;
    for (const auto& r : rows_) {
      std::vector<mpq_class> s;
      for (int c : J.elements()) s.push_back(r[static_cast<std::size_t>(c - 1)]);
      sub.push_back(std::move(s));
    }
    const mpq_class d = determinant(std::move(sub));
    cache_.emplace(J.mask(), d);
    return d;
  }

  /// Value of a Plücker variable under the normalisation p_{J_n} = 1.
  mpq_class normalized(const KSubset& J) const { return plucker(J) / plucker(frozen_right_label(n_, k_, n_)); }

  /// Evaluation map for expressions in Plücker variables (q evaluates to q_value).
  std::function<mpq_class(VarId)> valuation(mpq_class q_value = 1) const {
    return [this, q_value](VarId v) -> mpq_class {
      if (v == kQVar) return q_value;
      return normalized(KSubset::from_mask(n_, v));
    };
  }

 private:
  int k_;
  int n_;
  std::vector<std::vector<mpq_class>> rows_;
  mutable std::map<std::uint64_t, mpq_class> cache_;
};

/// Maximal minor of the generic (n-k) x n matrix as a polynomial in its entries.
inline Polynomial generic_minor(const KSubset& J) {
  const auto cols = J.elements();
  const int m = static_cast<int>(cols.size());
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  Polynomial out;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Monomial mono;
    for (int r = 0; r < m; ++r) mono = mono * Monomial::var(matrix_entry_var(r, cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] - 1));
    out.add_term(mono, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace plabica
