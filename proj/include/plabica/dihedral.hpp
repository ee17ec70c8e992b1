#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "plabica/subsets.hpp"

namespace plabica {

/// A bijection of [n], stored as its image list (images[i-1] = rho(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    require(n >= 1, "empty permutation");
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      require(x >= 1 && x <= n, "permutation image out of range");
      require(!seen[static_cast<std::size_t>(x - 1)], "permutation is not a bijection");
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  KSubset apply(const KSubset& s) const {
    require(s.n() == n(), "permutation and subset ground sets differ");
    std::uint64_t mask = 0;
    for (int x : s.elements()) mask |= std::uint64_t{1} << ((*this)(x)-1);
    return KSubset::from_mask(n(), mask);
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// sigma^shift (a rotation) or sigma^shift * tau (a reflection), where
/// sigma = x -> x+1 and tau = x -> n+2-x.
class DihedralElement {
 public:
  DihedralElement() = default;
  DihedralElement(int n, int shift, bool reflected) : n_(n), shift_(wrap(shift, n) % n), reflected_(reflected) {
    require(n >= 1 && n <= kMaxGround, "dihedral group order out of range");
  }

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement rotation(int n, int shift) { return {n, shift, false}; }
  static DihedralElement sigma(int n) { return {n, 1, false}; }
  static DihedralElement tau(int n) { return {n, 0, true}; }
  /// The reflection x -> c - x.
  static DihedralElement reflection_through(int n, int c) { return {n, c - 2, true}; }

  /// All 2n elements: rotations first, then reflections, each by shift.
  static std::vector<DihedralElement> all(int n) {
    std::vector<DihedralElement> out;
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < n; ++s) out.emplace_back(n, s, r == 1);
    return out;
  }

  int n() const { return n_; }
  int shift() const { return shift_; }
  bool reflected() const { return reflected_; }

  int operator()(int x) const { return reflected_ ? wrap(shift_ + 2 - x, n_) : wrap(x + shift_, n_); }

  /// (*this) o other
  DihedralElement compose(const DihedralElement& other) const {
    require(n_ == other.n_, "composing dihedral elements of different order");
    const int s = reflected_ ? shift_ - other.shift_ : shift_ + other.shift_;
    return {n_, s, reflected_ != other.reflected_};
  }
  DihedralElement operator*(const DihedralElement& other) const { return compose(other); }

  DihedralElement inverse() const {
    if (reflected_) return *this;
    return {n_, -shift_, false};
  }

  KSubset apply(const KSubset& s) const {
    require(s.n() == n_, "dihedral element and subset ground sets differ");
    std::uint64_t mask = 0;
    for (int x : s.elements()) mask |= std::uint64_t{1} << ((*this)(x)-1);
    return KSubset::from_mask(n_, mask);
  }

  LabelCollection apply(const LabelCollection& c) const {
    std::vector<KSubset> out;
    out.reserve(c.size());
    for (const auto& l : c) out.push_back(apply(l));
    return LabelCollection(c.n(), c.k(), std::move(out));
  }

  Permutation as_permutation() const {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int x = 1; x <= n_; ++x) img[static_cast<std::size_t>(x - 1)] = (*this)(x);
    return Permutation(std::move(img));
  }

  std::string to_string() const {
    std::string s = shift_ == 0 ? (reflected_ ? "" : "id") : "s^" + std::to_string(shift_);
    if (reflected_) s += s.empty() ? "t" : " t";
    return s;
  }

  bool operator==(const DihedralElement&) const = default;
  auto operator<=>(const DihedralElement&) const = default;

 private:
  int n_ = 1;
  int shift_ = 0;
  bool reflected_ = false;
};

/// The element of D_n equal to the given permutation, if there is one.
inline std::optional<DihedralElement> as_dihedral(const Permutation& p) {
  for (const auto& g : DihedralElement::all(p.n()))
    if (g.as_permutation() == p) return g;
  return std::nullopt;
}

namespace detail {

inline std::size_t subset_rank(std::uint64_t mask, const std::vector<std::vector<std::size_t>>& binom) {
  // Colex rank of a subset among subsets of the same size.
  std::size_t r = 0;
  std::size_t i = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++i) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(m));
    r += binom[pos][i + 1];
  }
  return r;
}

}  // namespace detail

/// Precomputed weak-separation table over all k-subsets of [n], used to test
/// many permutations quickly.
class WeakSeparationTable {
 public:
  WeakSeparationTable(int n, int k) : n_(n), k_(k), subsets_(all_k_subsets(n, k)) {
    require(n >= 1 && n <= 16, "weak separation table supports n <= 16");
    require(k >= 0 && k <= n, "k out of range");
    binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::size_t>(static_cast<std::size_t>(n + 2), 0));
    for (int a = 0; a <= n; ++a) {
      binom_[static_cast<std::size_t>(a)][0] = 1;
      for (int b = 1; b <= a; ++b)
        binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
            (b <= a - 1 ? binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0);
    }
    const std::size_t m = subsets_.size();
    by_rank_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) by_rank_[detail::subset_rank(subsets_[i].mask(), binom_)] = i;
    separated_.assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) separated_[i * m + j] = is_weakly_separated(subsets_[i], subsets_[j]);
  }

  /// rho(I) || rho(J) whenever I || J, over all pairs of k-subsets.
  bool preserved_by(const Permutation& rho) const {
    require(rho.n() == n_, "permutation acts on the wrong ground set");
    const std::size_t m = subsets_.size();
    std::vector<std::size_t> image(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t mask = 0;
      for (std::uint64_t s = subsets_[i].mask(); s != 0; s &= s - 1) mask |= std::uint64_t{1} << (rho(std::countr_zero(s) + 1) - 1);
      image[i] = by_rank_[detail::subset_rank(mask, binom_)];
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (separated_[i * m + j] && !separated_[image[i] * m + image[j]]) return false;
    return true;
  }

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::vector<KSubset> subsets_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<std::size_t> by_rank_;
  std::vector<bool> separated_;
};

inline bool preserves_weak_separation(const Permutation& rho, int k) {
  return WeakSeparationTable(rho.n(), k).preserved_by(rho);
}

}  // namespace plabica
