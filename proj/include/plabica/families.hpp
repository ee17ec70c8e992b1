#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plabica/dihedral.hpp"
#include "plabica/plabic_graph.hpp"
#include "plabica/trips.hpp"

namespace plabica {

enum class Family { rectangle, checkboard, dual_rectangle, dual_checkboard };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::rectangle: return "rec";
    case Family::checkboard: return "ch";
    case Family::dual_rectangle: return "dual-rec";
    case Family::dual_checkboard: return "dual-ch";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "rec" || s == "rectangle") return Family::rectangle;
  if (s == "ch" || s == "checkboard") return Family::checkboard;
  if (s == "dual-rec" || s == "dual-rectangle") return Family::dual_rectangle;
  if (s == "dual-ch" || s == "dual-checkboard") return Family::dual_checkboard;
  throw PreconditionError("unknown family '" + s + "' (expected rec, ch, dual-rec or dual-ch)");
}

inline int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }
inline int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Closed label formulas on the extended grid (boundary rows/columns give frozen labels).

inline KSubset rectangle_label(int k, int n, int i, int j) {
  require(i >= 0 && i <= n - k && j >= 0 && j <= k, "rectangle grid position out of range");
  return (initial_segment(i + j, n) - initial_segment(i, n)) | (initial_segment(n, n) - initial_segment(n - k + j, n));
}

inline KSubset checkboard_label(int k, int n, int i, int j) {
  return KSubset::shifted(rectangle_label(k, n, i, j), -ceil_half(i + j));
}

/// Rows i in 0..k, columns j in 0..n-k.
inline KSubset dual_rectangle_label(int k, int n, int i, int j) {
  require(i >= 0 && i <= k && j >= 0 && j <= n - k, "dual rectangle grid position out of range");
  return initial_segment(i, n) | (initial_segment(k + j, n) - initial_segment(i + j, n));
}

inline KSubset dual_checkboard_label(int k, int n, int i, int j) {
  return KSubset::shifted(dual_rectangle_label(k, n, i, j), -ceil_half(i + j));
}

/// A graph together with the faces of its inner grid, keyed by (row, column).
struct GridGraph {
  PlabicGraph graph;
  std::map<std::pair<int, int>, int> grid_faces;
};

inline PlabicGraph build_rectangle(int k, int n) {
  require_grassmannian_range(k, n);
  const int R = 2 * (n - k);
  const int C = 2 * k;
  EmbeddedBuilder b(n, k);
  std::map<std::pair<int, int>, int> v;
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= C; ++j) {
      if ((i + j) % 2 != 0 || (i == 1 && j == 1) || (i == R && j == C)) continue;
      v[{i, j}] = b.add_inner(i % 2 == 0 ? Colour::white : Colour::black, j, -i);
    }
  std::set<std::pair<int, int>> linked;
  auto link = [&](std::pair<int, int> p, std::pair<int, int> q) {
    auto a = v.find(p);
    auto c = v.find(q);
    if (a == v.end() || c == v.end()) return;
    const auto key = std::minmax(a->second, c->second);
    if (linked.insert(key).second) b.add_edge(a->second, c->second);
  };
  for (const auto& [p, id] : v) {
    const auto [i, j] = p;
    if (i % 2 == 1) {
      link(p, {i + 1, j - 1});
      link(p, {i + 1, j + 1});
    } else {
      link(p, {i - 1, j - 1});
      link(p, {i + 1, j - 1});
    }
  }
  int label = 1;
  auto attach = [&](std::pair<int, int> p, double x, double y) {
    b.place_boundary(label, x, y);
    b.add_edge(b.boundary_vertex(label), v.at(p));
    ++label;
  };
  attach({2, 2}, 0, -2);
  for (int j = 3; j <= C - 1; j += 2) attach({1, j}, j, 0);
  for (int i = 2; i <= R - 2; i += 2) attach({i, C}, C + 1, -i);
  attach({R - 1, C - 1}, C - 1, -R - 1);
  ensure(label == n + 1, "rectangle boundary count mismatch");
  return b.build();
}

inline GridGraph build_checkboard_grid(int k, int n) {
  require_grassmannian_range(k, n);
  const int R = n - k;
  const int C = k;
  EmbeddedBuilder b(n, k);
  std::vector<std::vector<int>> v(static_cast<std::size_t>(R + 1), std::vector<int>(static_cast<std::size_t>(C + 1), -1));
  auto at = [&](int i, int j) -> int& { return v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= C; ++j) at(i, j) = b.add_inner((i + j) % 2 == 0 ? Colour::white : Colour::black, j, -i);
  // Horizontal edges first, remembered for face lookup.
  std::map<std::pair<int, int>, int> horizontal;
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j < C; ++j) horizontal[{i, j}] = b.add_edge(at(i, j), at(i, j + 1));
  for (int i = 1; i < R; ++i)
    for (int j = 1; j <= C; ++j) b.add_edge(at(i, j), at(i + 1, j));

  auto white = [](int i, int j) { return (i + j) % 2 == 0; };
  // Boundary in clockwise order, starting after v_{1,1}: top, right, bottom, left.
  struct Stub {
    int i, j;
    double x, y;
  };
  std::vector<Stub> stubs;
  for (int j = 1; j <= C; ++j)
    if (!white(1, j)) stubs.push_back({1, j, double(j), 0.0});
  for (int i = 1; i <= R; ++i)
    if (white(i, C)) stubs.push_back({i, C, double(C + 1), double(-i)});
  for (int j = C; j >= 1; --j)
    if (!white(R, j)) stubs.push_back({R, j, double(j), double(-R - 1)});
  for (int i = R; i >= 1; --i)
    if (white(i, 1)) stubs.push_back({i, 1, 0.0, double(-i)});
  ensure(static_cast<int>(stubs.size()) == n, "checkboard boundary count mismatch");
  ensure(stubs.back().i == 1 && stubs.back().j == 1, "checkboard boundary must end at v_{1,1}");
  for (int label = 1; label <= n; ++label) {
    const auto& s = stubs[static_cast<std::size_t>(label - 1)];
    b.place_boundary(label, s.x, s.y);
    b.add_edge(b.boundary_vertex(label), at(s.i, s.j));
  }
  GridGraph out{b.build(), {}};
  // Face (i,j) lies below the edge v_{i,j} - v_{i,j+1}: left of the dart pointing west.
  for (int i = 1; i < R; ++i)
    for (int j = 1; j < C; ++j) out.grid_faces[{i, j}] = out.graph.face_of(2 * horizontal.at({i, j}) + 1);
  return out;
}

inline PlabicGraph build_checkboard(int k, int n) { return build_checkboard_grid(k, n).graph; }

/// Colour inversion plus boundary relabelling i -> i+k. Takes a graph of
/// type pi_{n-k,n} to one of type pi_{k,n} whose labels are the complements.
inline PlabicGraph build_dual(const PlabicGraph& g, int k, int n) {
  require(g.n() == n, "dual: boundary size mismatch");
  require(g.k() == n - k, "dual: input must have trip permutation pi_{n-k,n}");
  require(trip_permutation(g) == pi_kn(n - k, n), "dual: input trip permutation is not pi_{n-k,n}");
  GraphEditor ed(g);
  for (int v = n; v < ed.vertex_count(); ++v) ed.set_colour(v, opposite(ed.colour(v)));
  std::vector<int> perm;
  for (int i = 1; i <= n; ++i) perm.push_back(wrap(i + k, n));
  ed.relabel_boundary(perm);
  ed.set_k(k);
  return ed.build();
}

inline GridGraph build_dual_checkboard_grid(int k, int n) {
  require_grassmannian_range(k, n);
  auto base = build_checkboard_grid(n - k, n);
  return {build_dual(base.graph, k, n), base.grid_faces};
}

inline PlabicGraph build_family(Family f, int k, int n) {
  require_grassmannian_range(k, n);
  switch (f) {
    case Family::rectangle: return build_rectangle(k, n);
    case Family::checkboard: return build_checkboard(k, n);
    case Family::dual_rectangle: return build_dual(build_rectangle(n - k, n), k, n);
    case Family::dual_checkboard: return build_dual(build_checkboard(n - k, n), k, n);
  }
  throw InternalError("unknown family");
}

/// All inner-grid labels predicted by the closed formulas, plus the frozen labels.
inline LabelCollection family_label_formula(Family f, int k, int n) {
  require_grassmannian_range(k, n);
  std::vector<KSubset> out;
  for (int i = 1; i <= n; ++i) out.push_back(frozen_label(i, k, n));
  const bool dual = f == Family::dual_rectangle || f == Family::dual_checkboard;
  const int rows = dual ? k : n - k;
  const int cols = dual ? n - k : k;
  for (int i = 1; i < rows; ++i)
    for (int j = 1; j < cols; ++j) {
      switch (f) {
        case Family::rectangle: out.push_back(rectangle_label(k, n, i, j)); break;
        case Family::checkboard: out.push_back(checkboard_label(k, n, i, j)); break;
        case Family::dual_rectangle: out.push_back(dual_rectangle_label(k, n, i, j)); break;
        case Family::dual_checkboard: out.push_back(dual_checkboard_label(k, n, i, j)); break;
      }
    }
  return LabelCollection(n, k, std::move(out));
}

/// Dihedral action on graphs. Rotations relabel b_i as b_{g(i)}; reflections
/// mirror the embedding and relabel i -> sigma^k g(i), so that labels transform as g.
inline PlabicGraph dihedral_act(const DihedralElement& g, const PlabicGraph& G) {
  require(g.n() == G.n(), "dihedral element acts on the wrong boundary size");
  GraphEditor ed(G);
  std::vector<int> perm;
  if (g.reflected()) {
    ed.mirror();
    for (int i = 1; i <= G.n(); ++i) perm.push_back(wrap(g(i) + G.k(), G.n()));
  } else {
    for (int i = 1; i <= G.n(); ++i) perm.push_back(g(i));
  }
  ed.relabel_boundary(perm);
  return ed.build();
}

struct OrbitMember {
  DihedralElement element;
  LabelCollection labels;
};

/// Orbit of a label collection under D_n, one representative element per collection.
inline std::vector<OrbitMember> orbit(const LabelCollection& c) {
  std::vector<OrbitMember> out;
  std::set<LabelCollection> seen;
  for (const auto& g : DihedralElement::all(c.n())) {
    auto img = g.apply(c);
    if (seen.insert(img).second) out.push_back({g, std::move(img)});
  }
  return out;
}

inline std::vector<OrbitMember> orbit(const PlabicGraph& G) { return orbit(face_labels(G)); }

inline std::vector<DihedralElement> stabilizer(const LabelCollection& c) {
  std::vector<DihedralElement> out;
  for (const auto& g : DihedralElement::all(c.n()))
    if (g.apply(c) == c) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DihedralElement> stabilizer(const PlabicGraph& G) { return stabilizer(face_labels(G)); }

/// rho = x -> (k-1)(n-1)/2 - x, defined when (k-1)(n-1) is even.
inline DihedralElement checkboard_reflection(int k, int n) {
  require(((k - 1) * (n - 1)) % 2 == 0, "checkboard reflection needs (k-1)(n-1) even");
  return DihedralElement::reflection_through(n, (k - 1) * (n - 1) / 2);
}

/// Subgroup of D_n generated by the given elements.
inline std::vector<DihedralElement> generated_subgroup(int n, const std::vector<DihedralElement>& gens) {
  std::set<DihedralElement> group{DihedralElement::identity(n)};
  std::vector<DihedralElement> frontier{DihedralElement::identity(n)};
  while (!frontier.empty()) {
    const auto g = frontier.back();
    frontier.pop_back();
    for (const auto& h : gens) {
      const auto gh = g * h;
      if (group.insert(gh).second) frontier.push_back(gh);
    }
  }
  return {group.begin(), group.end()};
}

/// Closed-form stabilizer of the checkboard (or dual checkboard) graph, n >= 5.
inline std::vector<DihedralElement> predicted_checkboard_stabilizer(int k, int n, bool dual) {
  require_grassmannian_range(k, n);
  std::vector<DihedralElement> gens;
  if (n % 2 == 0) gens.push_back(DihedralElement::rotation(n, n / 2));
  if (k % 2 == 1 || n % 2 == 1) {
    const auto rho = checkboard_reflection(k, n);
    gens.push_back(dual ? DihedralElement::rotation(n, k) * rho : rho);
  }
  return generated_subgroup(n, gens);
}

}  // namespace plabica
