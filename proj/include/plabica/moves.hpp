#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plabica/plabic_graph.hpp"
#include "plabica/trips.hpp"

namespace plabica {

enum class MoveKind { m1, m2_contract, m2_uncontract, m3_insert, m3_remove };

struct Move {
  MoveKind kind = MoveKind::m1;
  int site = 0;  // face (M1), edge (M2-contract, M3-insert) or vertex (M2-uncontract, M3-remove)
  Colour colour = Colour::white;  // M3-insert
  int start = 0;                  // M2-uncontract: arc kept at the vertex
  int length = 0;
};

namespace detail {

inline std::vector<int> face_corners(const PlabicGraph& g, int f) {
  std::vector<int> out;
  for (int d : g.face_darts(f)) out.push_back(g.tail(d));
  return out;
}

inline bool is_bipartite_square(const PlabicGraph& g, int f) {
  const auto& darts = g.face_darts(f);
  if (darts.size() != 4 || f == g.outer_face()) return false;
  const auto c = face_corners(g, f);
  for (int i = 0; i < 4; ++i) {
    const int v = c[static_cast<std::size_t>(i)];
    if (g.is_boundary_vertex(v)) return false;
    for (int j = i + 1; j < 4; ++j)
      if (c[static_cast<std::size_t>(j)] == v) return false;
    if (g.colour(v) == g.colour(c[static_cast<std::size_t>((i + 1) % 4)])) return false;
  }
  return true;
}

}  // namespace detail

inline PlabicGraph apply_move(const PlabicGraph& g, const Move& m) {
  GraphEditor ed(g);
  switch (m.kind) {
    case MoveKind::m1: {
      require(m.site >= 0 && m.site < g.face_count(), "M1: face out of range");
      require(detail::is_bipartite_square(g, m.site), "M1 needs a bipartite square face");
      for (int v : detail::face_corners(g, m.site)) {
        require(g.degree(v) == 3, "M1 needs all four vertices of degree 3");
        ed.set_colour(v, opposite(g.colour(v)));
      }
      break;
    }
    case MoveKind::m2_contract:
      require(m.site >= 0 && m.site < g.edge_count(), "M2: edge out of range");
      ed.contract_edge(m.site);
      break;
    case MoveKind::m2_uncontract:
      require(m.site >= 0 && m.site < g.vertex_count(), "M2: vertex out of range");
      ed.uncontract(m.site, m.start, m.length);
      break;
    case MoveKind::m3_insert:
      require(m.site >= 0 && m.site < g.edge_count(), "M3: edge out of range");
      ed.subdivide(m.site, m.colour);
      break;
    case MoveKind::m3_remove:
      require(m.site >= 0 && m.site < g.vertex_count(), "M3: vertex out of range");
      ed.remove_degree_two(m.site);
      break;
  }
  return ed.build();
}

namespace detail {

inline bool removable_degree_two(const PlabicGraph& g, int v) {
  if (g.is_boundary_vertex(v) || g.degree(v) != 2) return false;
  const int a = g.head(g.rotation(v)[0]);
  const int b = g.head(g.rotation(v)[1]);
  return a != b && !(g.is_boundary_vertex(a) && g.is_boundary_vertex(b));
}

inline bool contractible_edge(const PlabicGraph& g, int e) {
  const int u = g.endpoints()[static_cast<std::size_t>(e)][0];
  const int v = g.endpoints()[static_cast<std::size_t>(e)][1];
  if (g.is_boundary_vertex(u) || g.is_boundary_vertex(v) || g.colour(u) != g.colour(v)) return false;
  int parallel = 0;
  for (int d : g.rotation(u))
    if (g.head(d) == v) ++parallel;
  return parallel == 1 && g.degree(u) + g.degree(v) >= 4;
}

}  // namespace detail

/// Applies M3 removals and M2 contractions until neither is possible.
inline PlabicGraph contract(const PlabicGraph& g) {
  PlabicGraph cur = g;
  while (true) {
    std::optional<Move> move;
    for (int v = cur.n(); v < cur.vertex_count() && !move; ++v)
      if (detail::removable_degree_two(cur, v)) move = Move{MoveKind::m3_remove, v};
    for (int e = 0; e < cur.edge_count() && !move; ++e)
      if (detail::contractible_edge(cur, e)) move = Move{MoveKind::m2_contract, e};
    if (!move) return cur;
    cur = apply_move(cur, *move);
  }
}

inline bool is_frozen_label(const KSubset& label, int k) {
  const int n = label.n();
  for (int i = 1; i <= n; ++i)
    if (frozen_label(i, k, n) == label) return true;
  return false;
}

/// Labels of faces that are squares in the contracted graph, sorted.
inline std::vector<KSubset> mutable_labels(const PlabicGraph& g) {
  const auto h = contract(g);
  const auto labels = face_label_vector(h);
  std::vector<KSubset> out;
  for (int f = 0; f < h.face_count(); ++f) {
    if (f == h.outer_face() || h.is_boundary_face(f)) continue;
    if (detail::is_bipartite_square(h, f)) out.push_back(labels[static_cast<std::size_t>(f)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_mutable(const PlabicGraph& g, const KSubset& label) {
  const auto m = mutable_labels(g);
  return std::binary_search(m.begin(), m.end(), label);
}

struct MutationResult {
  PlabicGraph graph;  // contracted
  KSubset removed;
  KSubset added;
};

/// Square move at the face labelled I, after the auxiliary moves that make
/// its corners trivalent. The result is contracted.
inline MutationResult mutate_with_label(const PlabicGraph& g, const KSubset& label) {
  require(label.n() == g.n() && label.size() == g.k(), "mutation label must be a " + std::to_string(g.k()) + "-subset of [" + std::to_string(g.n()) + "]");
  require(!is_frozen_label(label, g.k()), "label " + label.to_string() + " is frozen");
  const auto h = contract(g);
  const auto before = face_label_vector(h);
  int face = -1;
  for (int f = 0; f < h.face_count(); ++f)
    if (f != h.outer_face() && before[static_cast<std::size_t>(f)] == label) face = f;
  require(face >= 0, "label " + label.to_string() + " does not occur in the graph");
  require(detail::is_bipartite_square(h, face), "face " + label.to_string() + " is not mutable (not a square face)");

  GraphEditor ed(h);
  const auto& darts = h.face_darts(face);
  std::vector<int> corners;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const int d_in = darts[(i + darts.size() - 1) % darts.size()];
    const int d_out = darts[i];
    const int v = h.tail(d_out);
    corners.push_back(v);
    if (h.degree(v) > 3) ed.uncontract(v, h.position_in_rotation(PlabicGraph::twin(d_in)), 2);
  }
  for (int v : corners) ed.set_colour(v, opposite(ed.colour(v)));
  auto mutated = contract(ed.build());
  auto after = face_labels(mutated);
  const auto old_labels = face_labels(h);
  std::vector<KSubset> added;
  for (const auto& l : after)
    if (!old_labels.contains(l)) added.push_back(l);
  ensure(added.size() == 1 && !after.contains(label), "square move changed more than one label");
  return {std::move(mutated), label, added.front()};
}

inline PlabicGraph mutate(const PlabicGraph& g, const KSubset& label) { return mutate_with_label(g, label).graph; }

}  // namespace plabica
