#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plabica/families.hpp"
#include "plabica/seed.hpp"

namespace plabica {

inline constexpr int kDefaultBudget = 16;

/// Depth cap for mutation searches, from PLABICA_BUDGET when set.
inline int search_budget() {
  if (const char* env = std::getenv("PLABICA_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 1000) return static_cast<int>(v);
  }
  return kDefaultBudget;
}

/// Breadth-first search over the mutation graph of G. Nodes are contracted
/// graphs keyed by their label collections; each layer is expanded in
/// lexicographic order of the collections, mutable faces in label order.
class PluckerExpander {
 public:
  explicit PluckerExpander(const PlabicGraph& g, int budget = search_budget(), bool normalized = true)
      : budget_(budget) {
    const auto root = contract(g);
    Node node{root, seed_from_graph(root, normalized), 0, -1, {}};
    layer_.push_back(add_node(std::move(node)));
  }

  int budget() const { return budget_; }
  // Reference is invalidated by further searches.
  const Seed& root_seed() const { return nodes_.front().seed; }
  std::size_t explored() const { return nodes_.size(); }

  /// p_J as an expression in the initial seed.
  RationalExpr express(const KSubset& J) {
    std::lock_guard lock(mutex_);
    const int node = locate(J);
    return nodes_[static_cast<std::size_t>(node)].seed.variable(J);
  }

  /// Left labels mutated, in order, on a shortest path to a seed containing J.
  std::vector<KSubset> path_to(const KSubset& J) {
    std::lock_guard lock(mutex_);
    int node = locate(J);
    std::vector<KSubset> path;
    while (nodes_[static_cast<std::size_t>(node)].parent >= 0) {
      path.push_back(nodes_[static_cast<std::size_t>(node)].mutated);
      node = nodes_[static_cast<std::size_t>(node)].parent;
    }
    return {path.rbegin(), path.rend()};
  }

 private:
  struct Node {
    PlabicGraph graph;
    Seed seed;
    int depth;
    int parent;
    KSubset mutated;
  };

  int add_node(Node node) {
    const int id = static_cast<int>(nodes_.size());
    index_.emplace(face_labels(node.graph), id);
    for (const auto& [J, e] : node.seed.variables) found_.try_emplace(J, id);
    nodes_.push_back(std::move(node));
    return id;
  }

  int locate(const KSubset& J) {
    const int k = nodes_.front().seed.k;
    const int n = nodes_.front().seed.n;
    require(J.n() == n && J.size() == n - k, "Plücker label must be an " + std::to_string(n - k) + "-subset of [" + std::to_string(n) + "]");
    while (true) {
      if (auto it = found_.find(J); it != found_.end()) return it->second;
      if (layer_.empty()) throw InternalError("mutation graph exhausted without reaching " + J.to_string());
      const int depth = nodes_[static_cast<std::size_t>(layer_.front())].depth;
      if (depth + 1 > budget_)
        throw BudgetExceeded("no seed containing " + J.to_string() + " within " + std::to_string(budget_) + " mutations");
      expand_layer();
    }
  }

  void expand_layer() {
    std::map<LabelCollection, Node> next;
    for (int id : layer_) {
      const Node& cur = nodes_[static_cast<std::size_t>(id)];
      for (const auto& label : mutable_labels(cur.graph)) {
        auto res = mutate_with_label(cur.graph, label);
        auto labels = face_labels(res.graph);
        if (index_.count(labels) || next.count(labels)) continue;
        Seed seed = mutate_seed(cur.seed, label.complement());
        ensure(seed.has(res.added.complement()), "seed and graph mutation disagree at " + label.to_string());
        next.emplace(std::move(labels), Node{std::move(res.graph), std::move(seed), cur.depth + 1, id, label});
      }
    }
    layer_.clear();
    for (auto& [labels, node] : next) layer_.push_back(add_node(std::move(node)));
  }

  int budget_;
  std::vector<Node> nodes_;
  std::map<LabelCollection, int> index_;
  std::map<KSubset, int> found_;
  std::vector<int> layer_;
  std::mutex mutex_;
};

/// One-shot version of PluckerExpander::express.
inline RationalExpr express_plucker(const PlabicGraph& g, const KSubset& J, int budget = search_budget()) {
  PluckerExpander ex(g, budget);
  return ex.express(J);
}

enum class DiagonalKind { up, down };

/// Grid positions (row, column) of a diagonal sequence in G^ch_{k,n}; the
/// inner faces are f_{i,j} with 1 <= i <= n-k-1 and 1 <= j <= k-1.
inline std::vector<std::pair<int, int>> diagonal_sequence(DiagonalKind kind, int d, int k, int n) {
  require_grassmannian_range(k, n);
  require(d % 2 == 0, "diagonal sequences need an even diagonal index");
  require(d >= 2 - k && d <= n - k - 2, "diagonal index out of range [" + std::to_string(2 - k) + "," + std::to_string(n - k - 2) + "]");
  auto diagonal = [&](int e) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n - k - 1; ++i) {
      const int j = i - e;
      if (j >= 1 && j <= k - 1) out.emplace_back(i, j);
    }
    return out;  // top to bottom
  };
  std::vector<std::pair<int, int>> seq;
  if (kind == DiagonalKind::down) {
    seq = diagonal(d + 1);
    const auto main = diagonal(d);
    seq.insert(seq.end(), main.begin(), main.end());
  } else {
    seq = diagonal(d - 1);
    const auto main = diagonal(d);
    seq.insert(seq.end(), main.rbegin(), main.rend());
  }
  return seq;
}

/// Seed mutations along grid positions of G^ch_{k,n} (labels tracked per position).
class GridWalker {
 public:
  GridWalker(int k, int n, Seed seed, std::map<std::pair<int, int>, KSubset> positions)
      : k_(k), n_(n), seed_(std::move(seed)), pos_(std::move(positions)) {}

  /// Mutates the face at (i, j); returns its new right label.
  KSubset mutate(int i, int j) {
    auto it = pos_.find({i, j});
    require(it != pos_.end(), "no inner face at grid position (" + std::to_string(i) + "," + std::to_string(j) + ")");
    const KSubset old = it->second;
    const KSubset added = exchanged_label(seed_.quiver, old);
    seed_ = mutate_seed(seed_, old);
    it->second = added;
    return added;
  }

  const Seed& seed() const { return seed_; }
  int k() const { return k_; }
  int n() const { return n_; }

 private:
  int k_;
  int n_;
  Seed seed_;
  std::map<std::pair<int, int>, KSubset> pos_;
};

/// Walker on sigma^m G^ch_{k,n} with position (i, j) carrying sigma^m J^ch_{i,j}.
inline GridWalker checkboard_walker(int k, int n, int m, bool normalized = true) {
  const auto rot = DihedralElement::rotation(n, m);
  const PlabicGraph g = dihedral_act(rot, build_checkboard(k, n));
  std::map<std::pair<int, int>, KSubset> pos;
  for (int i = 1; i < n - k; ++i)
    for (int j = 1; j < k; ++j) pos[{i, j}] = rot.apply(checkboard_label(k, n, i, j)).complement();
  return {k, n, seed_from_graph(g, normalized), std::move(pos)};
}

/// Expressions for every p_{J_i^+} in the seed of sigma^m G^ch_{k,n}, found with
/// the diagonal sequences and the single corner mutations.
inline std::map<KSubset, RationalExpr> checkboard_plus_expressions(int k, int n, int m, bool normalized = true) {
  require_grassmannian_range(k, n);
  std::map<KSubset, RationalExpr> out;
  std::vector<KSubset> targets;
  for (int i = 1; i <= n; ++i) targets.push_back(superpotential_label(i, k, n));
  auto record = [&](const Seed& s) {
    for (const auto& t : targets)
      if (s.has(t)) out.try_emplace(t, s.variable(t));
  };
  record(checkboard_walker(k, n, m, normalized).seed());
  for (const auto& corner : {std::pair{1, k - 1}, std::pair{n - k - 1, 1}}) {
    auto w = checkboard_walker(k, n, m, normalized);
    w.mutate(corner.first, corner.second);
    record(w.seed());
  }
  for (int d = 2 - k; d <= n - k - 2; ++d) {
    if (d % 2 != 0) continue;
    for (auto kind : {DiagonalKind::down, DiagonalKind::up}) {
      auto w = checkboard_walker(k, n, m, normalized);
      for (const auto& [i, j] : diagonal_sequence(kind, d, k, n)) w.mutate(i, j);
      record(w.seed());
    }
  }
  return out;
}

}  // namespace plabica
