#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plabica/moves.hpp"
#include "plabica/trips.hpp"

namespace plabica {

/// Quiver on labelled vertices; arrows are kept as a multiplicity map.
class Quiver {
 public:
  using Arrow = std::pair<KSubset, KSubset>;

  Quiver() = default;

  void add_vertex(const KSubset& label, bool frozen) {
    require(!vertices_.count(label), "duplicate quiver vertex " + label.to_string());
    vertices_[label] = frozen;
  }

  /// Adds m arrows a -> b, cancelling against existing arrows b -> a.
  void add_arrows(const KSubset& a, const KSubset& b, int m = 1) {
    require(vertices_.count(a) && vertices_.count(b), "arrow between unknown vertices");
    require(!(a == b), "quivers have no loops");
    if (m <= 0) return;
    auto rev = arrows_.find({b, a});
    if (rev != arrows_.end()) {
      const int c = std::min(m, rev->second);
      rev->second -= c;
      m -= c;
      if (rev->second == 0) arrows_.erase(rev);
    }
    if (m > 0) arrows_[{a, b}] += m;
  }

  bool has_vertex(const KSubset& v) const { return vertices_.count(v) != 0; }
  bool is_frozen(const KSubset& v) const {
    auto it = vertices_.find(v);
    require(it != vertices_.end(), "unknown quiver vertex " + v.to_string());
    return it->second;
  }
  int multiplicity(const KSubset& a, const KSubset& b) const {
    auto it = arrows_.find({a, b});
    return it == arrows_.end() ? 0 : it->second;
  }
  const std::map<KSubset, bool>& vertices() const { return vertices_; }
  const std::map<Arrow, int>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t frozen_count() const {
    std::size_t c = 0;
    for (const auto& [v, f] : vertices_) c += f ? 1 : 0;
    return c;
  }

  /// (source, multiplicity) pairs of arrows into w, and (target, multiplicity) out of w.
  std::vector<std::pair<KSubset, int>> in_neighbours(const KSubset& w) const {
    std::vector<std::pair<KSubset, int>> out;
    for (const auto& [a, m] : arrows_)
      if (a.second == w) out.emplace_back(a.first, m);
    return out;
  }
  std::vector<std::pair<KSubset, int>> out_neighbours(const KSubset& w) const {
    std::vector<std::pair<KSubset, int>> out;
    for (const auto& [a, m] : arrows_)
      if (a.first == w) out.emplace_back(a.second, m);
    return out;
  }

  void drop_frozen_arrows() {
    for (auto it = arrows_.begin(); it != arrows_.end();) {
      if (vertices_.at(it->first.first) && vertices_.at(it->first.second))
        it = arrows_.erase(it);
      else
        ++it;
    }
  }

  /// Renames vertex `from` to `to`.
  Quiver relabelled(const KSubset& from, const KSubset& to) const {
    auto r = [&](const KSubset& v) { return v == from ? to : v; };
    Quiver q;
    for (const auto& [v, f] : vertices_) q.add_vertex(r(v), f);
    for (const auto& [a, m] : arrows_) q.arrows_[{r(a.first), r(a.second)}] = m;
    return q;
  }

  bool operator==(const Quiver&) const = default;

 private:
  std::map<KSubset, bool> vertices_;
  std::map<Arrow, int> arrows_;
};

/// One vertex per inner face (frozen iff boundary face); an arrow crosses
/// each bicoloured edge with the white endpoint on its left.
inline Quiver quiver_from_graph(const PlabicGraph& g) {
  const auto labels = face_label_vector(g);
  Quiver q;
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face()) continue;
    q.add_vertex(labels[static_cast<std::size_t>(f)], g.is_boundary_face(f));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!g.is_bicoloured(e)) continue;
    const int d = g.colour(g.tail(2 * e)) == Colour::white ? 2 * e : 2 * e + 1;  // white -> black
    const int from = g.face_of(PlabicGraph::twin(d));
    const int to = g.face_of(d);
    if (from == to || from == g.outer_face() || to == g.outer_face()) continue;
    q.add_arrows(labels[static_cast<std::size_t>(from)], labels[static_cast<std::size_t>(to)]);
  }
  q.drop_frozen_arrows();
  return q;
}

/// Mutation at mutable vertex w: composite arrows, reversal at w, 2-cycle cancellation.
inline Quiver mutate_quiver(const Quiver& q, const KSubset& w) {
  require(q.has_vertex(w), "quiver has no vertex " + w.to_string());
  require(!q.is_frozen(w), "vertex " + w.to_string() + " is frozen");
  const auto ins = q.in_neighbours(w);
  const auto outs = q.out_neighbours(w);
  Quiver r;
  for (const auto& [v, f] : q.vertices()) r.add_vertex(v, f);
  for (const auto& [a, m] : q.arrows()) {
    if (a.first == w || a.second == w) continue;
    r.add_arrows(a.first, a.second, m);
  }
  for (const auto& [i, mi] : ins)
    for (const auto& [j, mj] : outs) {
      if (i == j || (q.is_frozen(i) && q.is_frozen(j))) continue;
      r.add_arrows(i, j, mi * mj);
    }
  for (const auto& [i, m] : ins) r.add_arrows(w, i, m);
  for (const auto& [j, m] : outs) r.add_arrows(j, w, m);
  return r;
}

}  // namespace plabica
