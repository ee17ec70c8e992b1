#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plabica/quiver.hpp"
#include "plabica/trips.hpp"

namespace plabica {

/// Tutte embedding: boundary on the unit circle (clockwise from the top),
/// inner vertices at the barycentre of their neighbours.
inline std::vector<std::pair<double, double>> tutte_layout(const PlabicGraph& g, int iterations = 2000) {
  const int V = g.vertex_count();
  std::vector<std::pair<double, double>> pos(static_cast<std::size_t>(V), {0.0, 0.0});
  const double pi = std::acos(-1.0);
  for (int i = 1; i <= g.n(); ++i) {
    const double a = pi / 2 - 2 * pi * (i - 1) / g.n();
    pos[static_cast<std::size_t>(g.boundary_vertex(i))] = {std::cos(a), std::sin(a)};
  }
  for (int it = 0; it < iterations; ++it)
    for (int v = g.n(); v < V; ++v) {
      double x = 0, y = 0;
      for (int d : g.rotation(v)) {
        x += pos[static_cast<std::size_t>(g.head(d))].first;
        y += pos[static_cast<std::size_t>(g.head(d))].second;
      }
      const double deg = static_cast<double>(g.degree(v));
      pos[static_cast<std::size_t>(v)] = {x / deg, y / deg};
    }
  return pos;
}

inline std::string to_dot(const PlabicGraph& g) {
  const auto pos = tutte_layout(g);
  std::ostringstream os;
  os << "graph plabic {\n  node [shape=circle, width=0.15, label=\"\"];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto [x, y] = pos[static_cast<std::size_t>(v)];
    os << "  v" << v << " [pos=\"" << 4 * x << "," << 4 * y << "!\"";
    if (g.is_boundary_vertex(v))
      os << ", shape=plaintext, label=\"" << g.boundary_index(v) << "\"";
    else
      os << ", style=filled, fillcolor=" << (g.colour(v) == Colour::black ? "black" : "white");
    os << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ep = g.endpoints()[static_cast<std::size_t>(e)];
    os << "  v" << ep[0] << " -- v" << ep[1];
    if (g.is_boundary_edge(e)) os << " [style=dotted]";
    os << ";\n";
  }
  const auto labels = face_label_vector(g);
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face()) continue;
    double x = 0, y = 0;
    const auto& darts = g.face_darts(f);
    for (int d : darts) {
      x += pos[static_cast<std::size_t>(g.tail(d))].first;
      y += pos[static_cast<std::size_t>(g.tail(d))].second;
    }
    x /= static_cast<double>(darts.size());
    y /= static_cast<double>(darts.size());
    os << "  f" << f << " [shape=plaintext, fontsize=8, pos=\"" << 4 * x << "," << 4 * y << "!\", label=\""
       << labels[static_cast<std::size_t>(f)].key() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& [v, f] : q.vertices())
    os << "  \"" << v.key() << "\"" << (f ? " [shape=box]" : "") << ";\n";
  for (const auto& [a, m] : q.arrows()) {
    os << "  \"" << a.first.key() << "\" -> \"" << a.second.key() << "\"";
    if (m > 1) os << " [label=\"" << m << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plabica
