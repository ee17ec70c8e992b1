#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plabica/errors.hpp"
#include "plabica/subsets.hpp"

namespace plabica {

enum class Colour : std::uint8_t { black, white, boundary };

inline const char* colour_name(Colour c) {
  switch (c) {
    case Colour::black: return "black";
    case Colour::white: return "white";
    case Colour::boundary: return "boundary";
  }
  return "?";
}

inline Colour opposite(Colour c) {
  ensure(c != Colour::boundary, "boundary vertices have no opposite colour");
  return c == Colour::black ? Colour::white : Colour::black;
}

/// A plabic graph in a disk, stored as a rotation system.
///
/// Vertices 0..n-1 are the boundary vertices b_1..b_n, placed clockwise.
/// Edge e has half-edges (darts) 2e, pointing from endpoints[e][0] to
/// endpoints[e][1], and 2e+1 in the opposite direction. Each vertex lists its
/// outgoing darts in clockwise order. The boundary cycle b_1 b_2 ... b_n is
/// part of the map, so tracing faces yields the inner faces plus one outer
/// face. Every dart has its left face: the face traced by repeatedly taking
/// the next clockwise dart after the reversal, i.e. turning maximally left.
class PlabicGraph {
 public:
  PlabicGraph() = default;

  /// Validates the data and derives faces. Boundary rotations may start at
  /// any of their three darts; they are stored starting at the dart to b_{i+1}.
  static PlabicGraph from_parts(int n, int k, std::vector<Colour> colours, std::vector<std::array<int, 2>> endpoints,
                                std::vector<std::vector<int>> rotations) {
    PlabicGraph g;
    g.n_ = n;
    g.k_ = k;
    g.colours_ = std::move(colours);
    g.endpoints_ = std::move(endpoints);
    g.rotations_ = std::move(rotations);
    g.validate_and_index();
    return g;
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int vertex_count() const { return static_cast<int>(colours_.size()); }
  int edge_count() const { return static_cast<int>(endpoints_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  Colour colour(int v) const { return colours_[idx(v)]; }
  bool is_boundary_vertex(int v) const { return v < n_; }
  /// Vertex id of b_i (1-based boundary index).
  int boundary_vertex(int i) const { return i - 1; }
  int boundary_index(int v) const { return v + 1; }
  int degree(int v) const { return static_cast<int>(rotations_[idx(v)].size()); }
  const std::vector<int>& rotation(int v) const { return rotations_[idx(v)]; }
  const std::vector<Colour>& colours() const { return colours_; }
  const std::vector<std::array<int, 2>>& endpoints() const { return endpoints_; }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }

  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int tail(int d) const { return endpoints_[idx(d >> 1)][static_cast<std::size_t>(d & 1)]; }
  int head(int d) const { return endpoints_[idx(d >> 1)][static_cast<std::size_t>((d & 1) ^ 1)]; }

  /// Next outgoing dart clockwise around tail(d).
  int next_cw(int d) const {
    const auto& rot = rotations_[idx(tail(d))];
    return rot[(static_cast<std::size_t>(position_[idx(d)]) + 1) % rot.size()];
  }
  int prev_cw(int d) const {
    const auto& rot = rotations_[idx(tail(d))];
    return rot[(static_cast<std::size_t>(position_[idx(d)]) + rot.size() - 1) % rot.size()];
  }
  int position_in_rotation(int d) const { return position_[idx(d)]; }

  bool is_boundary_edge(int e) const { return is_boundary_vertex(endpoints_[idx(e)][0]) && is_boundary_vertex(endpoints_[idx(e)][1]); }
  bool is_inner_edge(int e) const { return !is_boundary_edge(e); }
  bool is_bicoloured(int e) const {
    const Colour a = colour(endpoints_[idx(e)][0]);
    const Colour b = colour(endpoints_[idx(e)][1]);
    return a != Colour::boundary && b != Colour::boundary && a != b;
  }

  /// Dart b_i -> b_{i+1}.
  int boundary_dart(int i) const { return rotations_[idx(boundary_vertex(i))][0]; }
  /// Dart from b_i into the interior.
  int boundary_inner_dart(int i) const { return rotations_[idx(boundary_vertex(i))][1]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(int d) const { return face_of_dart_[idx(d)]; }
  const std::vector<int>& face_darts(int f) const { return faces_[idx(f)]; }
  int outer_face() const { return outer_face_; }
  int inner_face_count() const { return face_count() - 1; }
  /// Face incident to b_i and b_{i+1} inside the disk.
  int boundary_face(int i) const { return face_of(twin(boundary_dart(i))); }
  bool is_boundary_face(int f) const {
    for (int d : faces_[idx(f)])
      if (is_boundary_edge(edge_of(d))) return true;
    return false;
  }
  /// Next dart along the boundary of face_of(d).
  int face_next(int d) const { return next_cw(twin(d)); }

  bool operator==(const PlabicGraph& o) const {
    return n_ == o.n_ && k_ == o.k_ && colours_ == o.colours_ && endpoints_ == o.endpoints_ && rotations_ == o.rotations_;
  }

 private:
  template <class T>
  static std::size_t idx(T v) {
    return static_cast<std::size_t>(v);
  }

  void validate_and_index() {
    require(n_ >= 3 && n_ <= kMaxGround, "plabic graph needs 3 <= n <= " + std::to_string(kMaxGround));
    require(k_ >= 0 && k_ <= n_, "k out of range");
    const int V = vertex_count();
    require(static_cast<int>(rotations_.size()) == V, "rotation system size differs from vertex count");
    require(V >= n_, "fewer vertices than boundary vertices");
    for (int v = 0; v < V; ++v) {
      if (v < n_)
        require(colours_[idx(v)] == Colour::boundary, "vertex " + std::to_string(v) + " should be a boundary vertex");
      else
        require(colours_[idx(v)] != Colour::boundary, "inner vertex " + std::to_string(v) + " must be black or white");
    }
    const int D = dart_count();
    position_.assign(idx(D), -1);
    for (int e = 0; e < edge_count(); ++e) {
      const auto [a, b] = endpoints_[idx(e)];
      require(a >= 0 && a < V && b >= 0 && b < V, "edge endpoint out of range");
      require(a != b, "loops are not allowed");
    }
    for (int v = 0; v < V; ++v) {
      const auto& rot = rotations_[idx(v)];
      for (std::size_t p = 0; p < rot.size(); ++p) {
        const int d = rot[p];
        require(d >= 0 && d < D, "rotation refers to unknown half-edge");
        require(tail(d) == v, "half-edge " + std::to_string(d) + " listed at a vertex it does not leave");
        require(position_[idx(d)] < 0, "half-edge listed twice in rotation system");
        position_[idx(d)] = static_cast<int>(p);
      }
    }
    for (int d = 0; d < D; ++d) require(position_[idx(d)] >= 0, "half-edge missing from rotation system");

    // Boundary vertices: exactly [to b_{i+1}, inner, to b_{i-1}] clockwise.
    for (int i = 1; i <= n_; ++i) {
      const int v = boundary_vertex(i);
      auto& rot = rotations_[idx(v)];
      require(rot.size() == 3, "boundary vertex b_" + std::to_string(i) + " must have one inner edge and two boundary edges");
      const int next_v = boundary_vertex(wrap(i + 1, n_));
      const int prev_v = boundary_vertex(wrap(i - 1, n_));
      std::size_t start = 3;
      for (std::size_t p = 0; p < 3; ++p)
        if (head(rot[p]) == next_v) start = p;
      require(start < 3, "boundary vertex b_" + std::to_string(i) + " is not joined to b_" + std::to_string(wrap(i + 1, n_)));
      std::vector<int> ordered{rot[start], rot[(start + 1) % 3], rot[(start + 2) % 3]};
      require(!is_boundary_vertex(head(ordered[1])), "boundary vertex b_" + std::to_string(i) + " must be incident to exactly one inner edge");
      require(head(ordered[2]) == prev_v, "boundary rotation at b_" + std::to_string(i) + " is not [next, inner, previous] clockwise");
      rot = std::move(ordered);
      for (std::size_t p = 0; p < 3; ++p) position_[idx(rot[p])] = static_cast<int>(p);
    }
    int boundary_edges = 0;
    for (int e = 0; e < edge_count(); ++e) {
      if (!is_boundary_edge(e)) continue;
      ++boundary_edges;
      const int a = endpoints_[idx(e)][0] + 1;
      const int b = endpoints_[idx(e)][1] + 1;
      require(wrap(a + 1, n_) == b || wrap(b + 1, n_) == a, "edge between non-consecutive boundary vertices");
    }
    require(boundary_edges == n_, "boundary cycle must consist of exactly n edges");

    // Connectivity.
    std::vector<bool> seen(idx(V), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : rotations_[idx(v)]) {
        const int w = head(d);
        if (!seen[idx(w)]) {
          seen[idx(w)] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    require(reached == V, "plabic graph must be connected");

    // Faces.
    face_of_dart_.assign(idx(D), -1);
    faces_.clear();
    for (int d = 0; d < D; ++d) {
      if (face_of_dart_[idx(d)] >= 0) continue;
      const int f = static_cast<int>(faces_.size());
      faces_.emplace_back();
      int cur = d;
      do {
        face_of_dart_[idx(cur)] = f;
        faces_.back().push_back(cur);
        cur = face_next(cur);
      } while (cur != d);
    }
    require(V - edge_count() + face_count() == 2, "rotation system does not describe a planar disk (Euler characteristic)");
    outer_face_ = face_of(boundary_dart(1));
    const auto& outer = faces_[idx(outer_face_)];
    require(static_cast<int>(outer.size()) == n_, "outer face must be the boundary cycle");
    for (int i = 1; i <= n_; ++i) require(face_of(boundary_dart(i)) == outer_face_, "boundary cycle is not a face");
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<Colour> colours_;
  std::vector<std::array<int, 2>> endpoints_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> position_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> faces_;
  int outer_face_ = -1;
};

/// Mutable working copy used to build graphs and apply local moves.
/// Deleted vertices and edges are tombstoned until build() compacts them.
class GraphEditor {
 public:
  GraphEditor(int n, int k) : n_(n), k_(k) {
    for (int i = 0; i < n; ++i) add_vertex(Colour::boundary);
  }

  explicit GraphEditor(const PlabicGraph& g) : n_(g.n()), k_(g.k()) {
    colours_ = g.colours();
    rotations_ = g.rotations();
    vertex_alive_.assign(colours_.size(), true);
    endpoints_ = g.endpoints();
    edge_alive_.assign(endpoints_.size(), true);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  void set_k(int k) { k_ = k; }

  int add_vertex(Colour c) {
    colours_.push_back(c);
    rotations_.emplace_back();
    vertex_alive_.push_back(true);
    return static_cast<int>(colours_.size()) - 1;
  }

  /// Adds edge u-v and returns its id; darts are 2e (u->v) and 2e+1 (v->u).
  /// Rotations are not touched.
  int add_edge(int u, int v) {
    endpoints_.push_back({u, v});
    edge_alive_.push_back(true);
    return static_cast<int>(endpoints_.size()) - 1;
  }

  void set_rotation(int v, std::vector<int> darts) { rotations_[static_cast<std::size_t>(v)] = std::move(darts); }
  const std::vector<int>& rotation(int v) const { return rotations_[static_cast<std::size_t>(v)]; }
  Colour colour(int v) const { return colours_[static_cast<std::size_t>(v)]; }
  void set_colour(int v, Colour c) { colours_[static_cast<std::size_t>(v)] = c; }
  bool vertex_alive(int v) const { return vertex_alive_[static_cast<std::size_t>(v)]; }
  bool edge_alive(int e) const { return edge_alive_[static_cast<std::size_t>(e)]; }
  int vertex_count() const { return static_cast<int>(colours_.size()); }
  int edge_count() const { return static_cast<int>(endpoints_.size()); }
  bool is_boundary_vertex(int v) const { return v < n_; }
  int tail(int d) const { return endpoints_[static_cast<std::size_t>(d >> 1)][static_cast<std::size_t>(d & 1)]; }
  int head(int d) const { return endpoints_[static_cast<std::size_t>(d >> 1)][static_cast<std::size_t>((d & 1) ^ 1)]; }

  /// Places a new vertex of colour c in the middle of inner edge e (M3 insertion).
  int subdivide(int e, Colour c) {
    require(c != Colour::boundary, "inserted vertex must be black or white");
    require(edge_alive(e), "edge does not exist");
    const auto [u, v] = endpoints_[static_cast<std::size_t>(e)];
    require(!(is_boundary_vertex(u) && is_boundary_vertex(v)), "cannot insert a vertex on a boundary edge");
    const int x = add_vertex(c);
    endpoints_[static_cast<std::size_t>(e)] = {u, x};
    const int f = add_edge(x, v);
    replace_in_rotation(v, 2 * e + 1, 2 * f + 1);
    set_rotation(x, {2 * e + 1, 2 * f});
    return x;
  }

  /// Removes an inner degree-2 vertex, merging its two edges (M3 removal).
  void remove_degree_two(int x) {
    require(vertex_alive(x) && !is_boundary_vertex(x), "M3 removal needs an inner vertex");
    const auto rot = rotation(x);
    require(rot.size() == 2, "M3 removal needs a vertex of degree 2");
    const int u = head(rot[0]);
    const int v = head(rot[1]);
    require(u != v, "M3 removal would create a loop");
    require(!(is_boundary_vertex(u) && is_boundary_vertex(v)), "M3 removal forbidden: both neighbours are boundary vertices");
    const int g = add_edge(u, v);
    replace_in_rotation(u, rot[0] ^ 1, 2 * g);
    replace_in_rotation(v, rot[1] ^ 1, 2 * g + 1);
    kill_edge(rot[0] >> 1);
    kill_edge(rot[1] >> 1);
    kill_vertex(x);
  }

  /// Contracts a unicoloured inner edge (M2 contraction). The surviving
  /// vertex is the tail of dart 2e.
  void contract_edge(int e) {
    require(edge_alive(e), "edge does not exist");
    const auto [u, v] = endpoints_[static_cast<std::size_t>(e)];
    require(!is_boundary_vertex(u) && !is_boundary_vertex(v), "M2 contraction needs an inner edge between inner vertices");
    require(colour(u) == colour(v), "M2 contraction needs a unicoloured edge");
    int parallel = 0;
    for (int d : rotation(u))
      if (head(d) == v) ++parallel;
    require(parallel == 1, "M2 contraction of a multiple edge would create a loop");
    const auto& ru = rotation(u);
    const auto& rv = rotation(v);
    require(ru.size() + rv.size() >= 4, "M2 contraction would produce a leaf");
    std::vector<int> merged;
    const auto pu = position(ru, 2 * e);
    for (std::size_t i = 1; i < ru.size(); ++i) merged.push_back(ru[(pu + i) % ru.size()]);
    const auto pv = position(rv, 2 * e + 1);
    for (std::size_t i = 1; i < rv.size(); ++i) {
      const int d = rv[(pv + i) % rv.size()];
      merged.push_back(d);
      endpoints_[static_cast<std::size_t>(d >> 1)][static_cast<std::size_t>(d & 1)] = u;
    }
    set_rotation(u, std::move(merged));
    kill_edge(e);
    kill_vertex(v);
  }

  /// Splits inner vertex v (M2 uncontraction): the arc of `length`
  /// consecutive darts starting at rotation position `start` stays at v,
  /// the rest move to a new vertex of the same colour joined to v.
  /// Returns the new vertex.
  int uncontract(int v, int start, int length) {
    require(vertex_alive(v) && !is_boundary_vertex(v), "M2 uncontraction needs an inner vertex");
    const auto rot = rotation(v);
    const int deg = static_cast<int>(rot.size());
    require(start >= 0 && start < deg, "uncontraction arc start out of range");
    require(length >= 1 && deg - length >= 1, "M2 uncontraction would produce a leaf");
    const int w = add_vertex(colour(v));
    const int e = add_edge(v, w);
    std::vector<int> keep;
    std::vector<int> moved;
    for (int i = 0; i < deg; ++i) {
      const int d = rot[static_cast<std::size_t>((start + i) % deg)];
      (i < length ? keep : moved).push_back(d);
    }
    keep.push_back(2 * e);
    std::vector<int> wrot{2 * e + 1};
    for (int d : moved) {
      wrot.push_back(d);
      endpoints_[static_cast<std::size_t>(d >> 1)][static_cast<std::size_t>(d & 1)] = w;
    }
    set_rotation(v, std::move(keep));
    set_rotation(w, std::move(wrot));
    return w;
  }

  /// Reverses every rotation (mirror image of the embedding).
  void mirror() {
    for (auto& r : rotations_) std::reverse(r.begin(), r.end());
  }

  /// Renames boundary vertex b_i to b_{perm[i-1]}. perm must map the
  /// boundary cycle onto itself preserving the clockwise order.
  void relabel_boundary(const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == n_, "boundary relabelling has wrong size");
    std::vector<int> vmap(colours_.size());
    for (int v = 0; v < vertex_count(); ++v) vmap[static_cast<std::size_t>(v)] = v;
    for (int i = 1; i <= n_; ++i) vmap[static_cast<std::size_t>(i - 1)] = perm[static_cast<std::size_t>(i - 1)] - 1;
    std::vector<std::vector<int>> rots(rotations_.size());
    for (int v = 0; v < vertex_count(); ++v) rots[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])] = rotations_[static_cast<std::size_t>(v)];
    rotations_ = std::move(rots);
    for (auto& ep : endpoints_) {
      ep[0] = vmap[static_cast<std::size_t>(ep[0])];
      ep[1] = vmap[static_cast<std::size_t>(ep[1])];
    }
  }

  /// Compacts tombstones and validates.
  PlabicGraph build() const {
    std::vector<int> vmap(colours_.size(), -1);
    std::vector<Colour> colours;
    for (int v = 0; v < vertex_count(); ++v) {
      if (!vertex_alive(v)) continue;
      vmap[static_cast<std::size_t>(v)] = static_cast<int>(colours.size());
      colours.push_back(colour(v));
    }
    std::vector<int> emap(endpoints_.size(), -1);
    std::vector<std::array<int, 2>> endpoints;
    for (int e = 0; e < edge_count(); ++e) {
      if (!edge_alive(e)) continue;
      emap[static_cast<std::size_t>(e)] = static_cast<int>(endpoints.size());
      const auto [a, b] = endpoints_[static_cast<std::size_t>(e)];
      require(vmap[static_cast<std::size_t>(a)] >= 0 && vmap[static_cast<std::size_t>(b)] >= 0, "edge refers to a deleted vertex");
      endpoints.push_back({vmap[static_cast<std::size_t>(a)], vmap[static_cast<std::size_t>(b)]});
    }
    std::vector<std::vector<int>> rotations;
    for (int v = 0; v < vertex_count(); ++v) {
      if (!vertex_alive(v)) continue;
      std::vector<int> r;
      for (int d : rotation(v)) {
        const int ne = emap[static_cast<std::size_t>(d >> 1)];
        require(ne >= 0, "rotation refers to a deleted edge");
        r.push_back(2 * ne + (d & 1));
      }
      rotations.push_back(std::move(r));
    }
    return PlabicGraph::from_parts(n_, k_, std::move(colours), std::move(endpoints), std::move(rotations));
  }

 private:
  static std::size_t position(const std::vector<int>& rot, int d) {
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (rot[i] == d) return i;
    throw InternalError("dart not found in rotation");
  }
  void replace_in_rotation(int v, int old_dart, int new_dart) {
    auto& rot = rotations_[static_cast<std::size_t>(v)];
    rot[position(rot, old_dart)] = new_dart;
  }
  void kill_edge(int e) { edge_alive_[static_cast<std::size_t>(e)] = false; }
  void kill_vertex(int v) {
    vertex_alive_[static_cast<std::size_t>(v)] = false;
    rotations_[static_cast<std::size_t>(v)].clear();
  }

  int n_;
  int k_;
  std::vector<Colour> colours_;
  std::vector<std::vector<int>> rotations_;
  std::vector<bool> vertex_alive_;
  std::vector<std::array<int, 2>> endpoints_;
  std::vector<bool> edge_alive_;
};

/// Builds a plabic graph from a straight-line drawing: inner rotations are
/// read off the coordinates (clockwise = decreasing angle, y pointing up),
/// the boundary cycle is added automatically.
class EmbeddedBuilder {
 public:
  EmbeddedBuilder(int n, int k) : n_(n), k_(k), x_(static_cast<std::size_t>(n), 0.0), y_(static_cast<std::size_t>(n), 0.0),
                                  colours_(static_cast<std::size_t>(n), Colour::boundary) {}

  /// Position of boundary vertex b_i; only used for angles seen from its inner neighbour.
  void place_boundary(int i, double x, double y) {
    x_[static_cast<std::size_t>(i - 1)] = x;
    y_[static_cast<std::size_t>(i - 1)] = y;
  }
  int add_inner(Colour c, double x, double y) {
    colours_.push_back(c);
    x_.push_back(x);
    y_.push_back(y);
    return static_cast<int>(colours_.size()) - 1;
  }
  int add_edge(int u, int v) {
    edges_.push_back({u, v});
    return static_cast<int>(edges_.size()) - 1;
  }
  int boundary_vertex(int i) const { return i - 1; }

  PlabicGraph build() const {
    std::vector<std::array<int, 2>> endpoints = edges_;
    const int inner_edges = static_cast<int>(endpoints.size());
    for (int i = 1; i <= n_; ++i) endpoints.push_back({i - 1, wrap(i + 1, n_) - 1});
    const int V = static_cast<int>(colours_.size());
    std::vector<std::vector<int>> out(static_cast<std::size_t>(V));
    for (int e = 0; e < inner_edges; ++e) {
      out[static_cast<std::size_t>(endpoints[static_cast<std::size_t>(e)][0])].push_back(2 * e);
      out[static_cast<std::size_t>(endpoints[static_cast<std::size_t>(e)][1])].push_back(2 * e + 1);
    }
    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(V));
    for (int v = n_; v < V; ++v) {
      auto darts = out[static_cast<std::size_t>(v)];
      auto angle = [&](int d) {
        const auto& ep = endpoints[static_cast<std::size_t>(d >> 1)];
        const int w = ep[static_cast<std::size_t>((d & 1) ^ 1)];
        return std::atan2(y_[static_cast<std::size_t>(w)] - y_[static_cast<std::size_t>(v)],
                          x_[static_cast<std::size_t>(w)] - x_[static_cast<std::size_t>(v)]);
      };
      std::sort(darts.begin(), darts.end(), [&](int a, int b) { return angle(a) > angle(b); });
      rotations[static_cast<std::size_t>(v)] = std::move(darts);
    }
    for (int i = 1; i <= n_; ++i) {
      const auto& inner = out[static_cast<std::size_t>(i - 1)];
      require(inner.size() == 1, "boundary vertex b_" + std::to_string(i) + " needs exactly one inner edge");
      const int to_next = 2 * (inner_edges + i - 1);
      const int to_prev = 2 * (inner_edges + wrap(i - 1, n_) - 1) + 1;
      rotations[static_cast<std::size_t>(i - 1)] = {to_next, inner[0], to_prev};
    }
    return PlabicGraph::from_parts(n_, k_, colours_, std::move(endpoints), std::move(rotations));
  }

 private:
  int n_;
  int k_;
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<Colour> colours_;
  std::vector<std::array<int, 2>> edges_;
};

}  // namespace plabica
