#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plabica/dihedral.hpp"
#include "plabica/plabic_graph.hpp"

namespace plabica {

struct Trip {
  int start = 0;  // boundary index, 0 for round trips
  int end = 0;
  std::vector<int> darts;  // inner darts in travel order
};

/// Dart following d on the trip: leftmost turn at white, rightmost at black.
inline int trip_step(const PlabicGraph& g, int d) {
  const int v = g.head(d);
  return g.colour(v) == Colour::white ? g.next_cw(PlabicGraph::twin(d)) : g.prev_cw(PlabicGraph::twin(d));
}

struct TripSet {
  std::vector<Trip> one_way;  // one_way[i-1] starts at b_i
  std::vector<Trip> round;
};

inline TripSet trips(const PlabicGraph& g) {
  TripSet out;
  std::vector<bool> used(static_cast<std::size_t>(g.dart_count()), false);
  for (int i = 1; i <= g.n(); ++i) {
    Trip t;
    t.start = i;
    int d = g.boundary_inner_dart(i);
    while (true) {
      require(!used[static_cast<std::size_t>(d)], "trip from " + std::to_string(i) + " revisits a half-edge; malformed rotation system");
      used[static_cast<std::size_t>(d)] = true;
      t.darts.push_back(d);
      const int v = g.head(d);
      if (g.is_boundary_vertex(v)) {
        t.end = g.boundary_index(v);
        break;
      }
      d = trip_step(g, d);
    }
    out.one_way.push_back(std::move(t));
  }
  // Each inner dart lies on exactly one trip; leftovers form round trips.
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (used[static_cast<std::size_t>(d0)] || g.is_boundary_edge(PlabicGraph::edge_of(d0))) continue;
    if (g.is_boundary_vertex(g.tail(d0)) || g.is_boundary_vertex(g.head(d0))) continue;
    Trip t;
    int d = d0;
    do {
      used[static_cast<std::size_t>(d)] = true;
      t.darts.push_back(d);
      d = trip_step(g, d);
    } while (d != d0 && !used[static_cast<std::size_t>(d)]);
    out.round.push_back(std::move(t));
  }
  return out;
}

/// i -> end of the trip starting at b_i.
inline Permutation trip_permutation(const PlabicGraph& g) {
  const auto ts = trips(g);
  std::vector<int> img;
  for (const auto& t : ts.one_way) img.push_back(t.end);
  return Permutation(std::move(img));
}

inline Permutation pi_kn(int k, int n) {
  std::vector<int> img;
  for (int i = 1; i <= n; ++i) img.push_back(wrap(i + k, n));
  return Permutation(std::move(img));
}

enum class ReducednessViolation { none, round_trip, essential_self_intersection, bad_double_crossing, leaf };

inline const char* violation_name(ReducednessViolation v) {
  switch (v) {
    case ReducednessViolation::none: return "none";
    case ReducednessViolation::round_trip: return "round trip";
    case ReducednessViolation::essential_self_intersection: return "essential self-intersection";
    case ReducednessViolation::bad_double_crossing: return "bad double crossing";
    case ReducednessViolation::leaf: return "leaf condition";
  }
  return "?";
}

struct ReducednessCertificate {
  bool reduced = true;
  ReducednessViolation violation = ReducednessViolation::none;
  std::vector<int> trips;  // boundary starts of the offending trips
  std::vector<int> edges;  // offending edges, or the offending vertex for leaves
  std::string message;

  explicit operator bool() const { return reduced; }
};

inline ReducednessCertificate is_reduced(const PlabicGraph& g) {
  ReducednessCertificate cert;
  auto fail = [&](ReducednessViolation v, std::vector<int> ts, std::vector<int> es, std::string msg) {
    cert.reduced = false;
    cert.violation = v;
    cert.trips = std::move(ts);
    cert.edges = std::move(es);
    cert.message = std::move(msg);
    return cert;
  };
  const auto ts = trips(g);
  if (!ts.round.empty())
    return fail(ReducednessViolation::round_trip, {}, {PlabicGraph::edge_of(ts.round.front().darts.front())}, "graph contains a round trip");

  // For each trip: first position at which it passes each bicoloured edge, per direction.
  const int n = g.n();
  std::vector<std::map<int, std::pair<int, int>>> passes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& t = ts.one_way[static_cast<std::size_t>(i)];
    for (int p = 0; p < static_cast<int>(t.darts.size()); ++p) {
      const int d = t.darts[static_cast<std::size_t>(p)];
      const int e = PlabicGraph::edge_of(d);
      if (!g.is_bicoloured(e)) continue;
      auto it = passes[static_cast<std::size_t>(i)].find(e);
      if (it == passes[static_cast<std::size_t>(i)].end()) {
        passes[static_cast<std::size_t>(i)][e] = {d, p};
      } else if (it->second.first != d) {
        return fail(ReducednessViolation::essential_self_intersection, {i + 1}, {e},
                    "trip from " + std::to_string(i + 1) + " passes edge " + std::to_string(e) + " in both directions");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // Essential intersections of trips a and b, with positions along each.
      std::vector<std::array<int, 3>> common;  // edge, pos in a, pos in b
      for (const auto& [e, da] : passes[static_cast<std::size_t>(a)]) {
        auto it = passes[static_cast<std::size_t>(b)].find(e);
        if (it == passes[static_cast<std::size_t>(b)].end() || it->second.first == da.first) continue;
        common.push_back({e, da.second, it->second.second});
      }
      for (std::size_t x = 0; x < common.size(); ++x)
        for (std::size_t y = x + 1; y < common.size(); ++y) {
          const bool a_first = common[x][1] < common[y][1];
          const bool b_first = common[x][2] < common[y][2];
          if (a_first == b_first)
            return fail(ReducednessViolation::bad_double_crossing, {a + 1, b + 1}, {common[x][0], common[y][0]},
                        "trips from " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " have a bad double crossing");
        }
    }
  }
  const auto perm = trip_permutation(g);
  for (int v = n; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) continue;
    const int w = g.head(g.rotation(v)[0]);
    if (!g.is_boundary_vertex(w) || perm(g.boundary_index(w)) != g.boundary_index(w))
      return fail(ReducednessViolation::leaf, {}, {v}, "inner leaf " + std::to_string(v) + " not attached to a fixed point");
  }
  for (int i = 1; i <= n; ++i) {
    if (perm(i) != i) continue;
    const int w = g.head(g.boundary_inner_dart(i));
    if (g.degree(w) != 1) return fail(ReducednessViolation::leaf, {i}, {w}, "fixed point " + std::to_string(i) + " is not adjacent to a leaf");
  }
  return cert;
}

/// Face labels by trips: face f carries i iff f lies left of the trip from b_i.
/// Entry f of the result is the label of face f; the outer face gets an empty label.
inline std::vector<KSubset> face_label_vector(const PlabicGraph& g) {
  const auto ts = trips(g);
  require(ts.round.empty(), "face labels need a graph without round trips");
  const int F = g.face_count();
  const int outer = g.outer_face();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(F), 0);
  std::vector<signed char> side(static_cast<std::size_t>(F));
  std::vector<bool> on_trip(static_cast<std::size_t>(g.edge_count()));
  for (const auto& t : ts.one_way) {
    std::fill(side.begin(), side.end(), 0);
    std::fill(on_trip.begin(), on_trip.end(), false);
    for (int d : t.darts) on_trip[static_cast<std::size_t>(PlabicGraph::edge_of(d))] = true;
    std::vector<int> stack;
    auto seed = [&](int f, signed char s) {
      if (f == outer) return;
      const auto& cur = side[static_cast<std::size_t>(f)];
      require(cur == 0 || cur == s, "trip from " + std::to_string(t.start) + " does not separate the disk consistently");
      if (cur == 0) {
        side[static_cast<std::size_t>(f)] = s;
        stack.push_back(f);
      }
    };
    for (int d : t.darts) {
      seed(g.face_of(d), 1);
      seed(g.face_of(PlabicGraph::twin(d)), -1);
    }
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      const signed char s = side[static_cast<std::size_t>(f)];
      for (int d : g.face_darts(f)) {
        const int e = PlabicGraph::edge_of(d);
        if (on_trip[static_cast<std::size_t>(e)] || g.is_boundary_edge(e)) continue;
        seed(g.face_of(PlabicGraph::twin(d)), s);
      }
    }
    for (int f = 0; f < F; ++f) {
      if (f == outer) continue;
      require(side[static_cast<std::size_t>(f)] != 0, "face not reached while labelling");
      if (side[static_cast<std::size_t>(f)] > 0) masks[static_cast<std::size_t>(f)] |= std::uint64_t{1} << (t.start - 1);
    }
  }
  std::vector<KSubset> out;
  for (int f = 0; f < F; ++f) out.push_back(KSubset::from_mask(g.n(), masks[static_cast<std::size_t>(f)]));
  return out;
}

inline LabelCollection face_labels(const PlabicGraph& g) {
  auto v = face_label_vector(g);
  std::vector<KSubset> labels;
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face()) continue;
    require(v[static_cast<std::size_t>(f)].size() == g.k(), "face label of wrong cardinality; graph is not of type pi_{k,n}");
    labels.push_back(v[static_cast<std::size_t>(f)]);
  }
  return LabelCollection(g.n(), g.k(), std::move(labels));
}

inline LabelCollection right_labels(const PlabicGraph& g) { return face_labels(g).complemented(); }

/// Face with left label I, if any.
inline std::optional<int> face_with_label(const PlabicGraph& g, const KSubset& label) {
  const auto v = face_label_vector(g);
  for (int f = 0; f < g.face_count(); ++f)
    if (f != g.outer_face() && v[static_cast<std::size_t>(f)] == label) return f;
  return std::nullopt;
}

}  // namespace plabica
