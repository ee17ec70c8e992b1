#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "plabica/errors.hpp"

namespace plabica {

inline constexpr int kMaxGround = 62;

/// Reduce an arbitrary integer to its representative in [1, n].
constexpr int wrap(long long x, int n) {
  long long r = (x - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// Distance travelled when walking clockwise from a to b on Z/nZ.
constexpr int cyclic_distance(int a, int b, int n) { return wrap(b - a + 1, n) - 1; }

/// (a, b, c, d) pairwise distinct and met in this order reading the cycle from a.
constexpr bool strictly_cyclically_ordered(int a, int b, int c, int d, int n) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
  const int db = cyclic_distance(a, b, n);
  const int dc = cyclic_distance(a, c, n);
  const int dd = cyclic_distance(a, d, n);
  return db < dc && dc < dd;
}

/// A subset of [n] = {1, ..., n}, stored as a bitmask (bit i-1 for element i).
class KSubset {
 public:
  KSubset() = default;

  KSubset(int n, std::initializer_list<int> elements) : KSubset(n, std::span<const int>(elements.begin(), elements.size())) {}

  KSubset(int n, std::span<const int> elements) : n_(n) {
    check_ground(n);
    for (int x : elements) {
      require(x >= 1 && x <= n, "subset element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
      const std::uint64_t bit = std::uint64_t{1} << (x - 1);
      require((mask_ & bit) == 0, "duplicate subset element " + std::to_string(x));
      mask_ |= bit;
    }
  }

  static KSubset from_mask(int n, std::uint64_t mask) {
    check_ground(n);
    require(n == 64 || (mask >> n) == 0, "mask has bits outside [1,n]");
    KSubset s;
    s.n_ = n;
    s.mask_ = mask;
    return s;
  }

  /// Image of a set under x -> x + shift (indices mod n).
  static KSubset shifted(const KSubset& s, int shift) {
    KSubset out;
    out.n_ = s.n_;
    for (int x : s.elements()) out.mask_ |= std::uint64_t{1} << (wrap(x + shift, s.n_) - 1);
    return out;
  }

  int n() const { return n_; }
  int size() const { return std::popcount(mask_); }
  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  bool contains(int x) const { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1U) != 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  KSubset complement() const { return from_mask(n_, full_mask(n_) & ~mask_); }
  KSubset operator|(const KSubset& o) const { return from_mask(same_n(o), mask_ | o.mask_); }
  KSubset operator&(const KSubset& o) const { return from_mask(same_n(o), mask_ & o.mask_); }
  KSubset operator-(const KSubset& o) const { return from_mask(same_n(o), mask_ & ~o.mask_); }

  bool operator==(const KSubset& o) const = default;

  /// Lexicographic order on the ascending element lists.
  std::strong_ordering operator<=>(const KSubset& o) const {
    if (n_ != o.n_) return n_ <=> o.n_;
    if (mask_ == o.mask_) return std::strong_ordering::equal;
    const std::uint64_t diff = mask_ ^ o.mask_;
    const std::uint64_t low = diff & (~diff + 1);
    // Every element below `low` is shared. The set owning `low` is smaller
    // unless the other one stops there (it is then a proper prefix).
    if ((mask_ & low) != 0) {
      const bool other_continues = (o.mask_ & ~((low << 1) - 1)) != 0;
      return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const bool this_continues = (mask_ & ~((low << 1) - 1)) != 0;
    return this_continues ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  /// "{1,2,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : elements()) {
      if (!first) s += ',';
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  /// "1,2,4": used as a variable / coordinate key.
  std::string key() const {
    std::string s;
    for (int x : elements()) {
      if (!s.empty()) s += ',';
      s += std::to_string(x);
    }
    return s;
  }

  static std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

 private:
  static void check_ground(int n) {
    require(n >= 1 && n <= kMaxGround, "ground set size must lie in [1," + std::to_string(kMaxGround) + "]");
  }
  int same_n(const KSubset& o) const {
    require(n_ == o.n_, "subsets over different ground sets");
    return n_;
  }

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

struct KSubsetHash {
  std::size_t operator()(const KSubset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask() * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.n()));
  }
};

/// <a, b>: {a, a+1, ..., b} read cyclically, wrapping past n when a > b.
inline KSubset cyclic_interval(int a, int b, int n) {
  require(n >= 1, "n must be positive");
  require(a >= 1 && a <= n && b >= 1 && b <= n, "cyclic interval endpoints must lie in [1,n]");
  std::uint64_t mask = 0;
  for (int x = a;; x = wrap(x + 1, n)) {
    mask |= std::uint64_t{1} << (x - 1);
    if (x == b) break;
  }
  return KSubset::from_mask(n, mask);
}

/// Same as cyclic_interval but endpoints are reduced mod n first.
inline KSubset cyclic_interval_mod(long long a, long long b, int n) {
  return cyclic_interval(wrap(a, n), wrap(b, n), n);
}

/// [m] = {1, ..., m} inside [n]; [0] is empty.
inline KSubset initial_segment(int m, int n) {
  require(m >= 0 && m <= n, "initial segment length out of range");
  return KSubset::from_mask(n, KSubset::full_mask(m));
}

/// Weak separation of two equal-size subsets: the symmetric difference,
/// read around the circle, splits into at most one block from each side.
inline bool is_weakly_separated(const KSubset& a, const KSubset& b) {
  require(a.n() == b.n(), "weak separation needs a common ground set");
  require(a.size() == b.size(), "weak separation needs subsets of equal cardinality");
  const std::uint64_t only_a = a.mask() & ~b.mask();
  const std::uint64_t only_b = b.mask() & ~a.mask();
  const std::uint64_t diff = only_a | only_b;
  if (diff == 0) return true;
  // Count side changes walking once around the cycle over the elements of diff.
  int changes = 0;
  int first_side = -1;
  int last_side = -1;
  for (std::uint64_t m = diff; m != 0; m &= m - 1) {
    const std::uint64_t bit = m & (~m + 1);
    const int side = (only_a & bit) != 0 ? 0 : 1;
    if (first_side < 0) first_side = side;
    if (last_side >= 0 && side != last_side) ++changes;
    last_side = side;
  }
  if (last_side != first_side) ++changes;
  return changes <= 2;
}

/// A set of distinct k-subsets of [n], kept sorted lexicographically.
class LabelCollection {
 public:
  LabelCollection() = default;

  LabelCollection(int n, int k, std::vector<KSubset> labels) : n_(n), k_(k), labels_(std::move(labels)) {
    for (const auto& l : labels_) {
      require(l.n() == n, "label over wrong ground set");
      require(l.size() == k, "label " + l.to_string() + " does not have cardinality " + std::to_string(k));
    }
    std::sort(labels_.begin(), labels_.end());
    require(std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(), "duplicate label in collection");
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<KSubset>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(const KSubset& s) const { return std::binary_search(labels_.begin(), labels_.end(), s); }

  /// (C \ {removed}) u {added}
  LabelCollection exchange(const KSubset& removed, const KSubset& added) const {
    require(contains(removed), "label " + removed.to_string() + " not in collection");
    std::vector<KSubset> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_)
      if (l != removed) out.push_back(l);
    out.push_back(added);
    return LabelCollection(n_, k_, std::move(out));
  }

  LabelCollection complemented() const {
    std::vector<KSubset> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(l.complement());
    return LabelCollection(n_, n_ - k_, std::move(out));
  }

  bool is_weakly_separated() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (!plabica::is_weakly_separated(labels_[i], labels_[j])) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i != 0) s += ' ';
      s += labels_[i].to_string();
    }
    return s + "]";
  }

  bool operator==(const LabelCollection& o) const = default;
  auto operator<=>(const LabelCollection& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = k_ <=> o.k_; c != 0) return c;
    return std::lexicographical_compare_three_way(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end());
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<KSubset> labels_;
};

struct LabelCollectionHash {
  std::size_t operator()(const LabelCollection& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.n()) * 31 + static_cast<std::size_t>(c.k());
    for (const auto& l : c) h = h * 1000003U ^ KSubsetHash{}(l);
    return h;
  }
};

/// Range check shared by every construction: 2 <= k <= n-2.
inline void require_grassmannian_range(int k, int n) {
  require(n >= 4 && n <= kMaxGround, "n must lie in [4," + std::to_string(kMaxGround) + "]");
  require(k >= 2 && k <= n - 2, "k must satisfy 2 <= k <= n-2 (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

/// Maximal weakly separated collection test via the cardinality criterion.
inline bool is_maximal_wsc(const LabelCollection& c) {
  return c.is_weakly_separated() && static_cast<long long>(c.size()) == static_cast<long long>(c.k()) * (c.n() - c.k()) + 1;
}

/// Frozen label I_i = <i-k+1, i>.
inline KSubset frozen_label(int i, int k, int n) { return cyclic_interval_mod(i - k + 1, i, n); }

/// Its complement J_i = <i+1, i+n-k>.
inline KSubset frozen_right_label(int i, int k, int n) { return cyclic_interval_mod(i + 1, i + n - k, n); }

/// J_i^+ = <i+1, i+n-k-1> u {i+n-k+1}.
inline KSubset superpotential_label(int i, int k, int n) {
  const KSubset head = cyclic_interval_mod(i + 1, i + n - k - 1, n);
  return head | KSubset(n, {wrap(i + n - k + 1, n)});
}

/// All k-subsets of [n] in lexicographic order.
inline std::vector<KSubset> all_k_subsets(int n, int k) {
  std::vector<KSubset> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  if (k < 0 || k > n) return out;
  while (true) {
    out.emplace_back(n, std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace plabica
