#pragma once

#include <map>
#include <string>
#include <vector>

#include "plabica/gelfand_tsetlin.hpp"

namespace plabica {

/// Unimodular invariants of Delta_G used as evidence.
struct BodyStats {
  std::size_t lattice_points = 0;     // Gamma_G^1
  std::size_t vertices = 0;           // Gamma_G^1
  std::size_t lattice_points_r2 = 0;  // Gamma_G^2, Ehrhart value at 2
  bool operator==(const BodyStats&) const = default;
};

inline BodyStats body_stats(const PlabicGraph& g, int budget = search_budget()) {
  const auto W = superpotential(g, budget);
  const auto coords = polytope_coordinates(g);
  const auto p1 = tropical_polytope(W, coords, 1);
  const auto p2 = tropical_polytope(W, coords, 2);
  return {lattice_points(p1).size(), vertices(p1).size(), lattice_points(p2).size()};
}

struct ScanEntry {
  DihedralElement element;
  BodyStats stats;
};

/// Rotations are compared with each other; reflections are listed on their
/// own and never folded into the verdict.
struct ScanReport {
  std::vector<ScanEntry> rotations;
  std::vector<ScanEntry> reflections;
  bool rotations_agree = false;
  bool reflections_match_rotation_stats = false;  // informational only
};

inline ScanReport conjecture_scan(const PlabicGraph& g, bool include_reflections = true, int budget = search_budget()) {
  const int n = g.n();
  const auto base = contract(g);
  std::map<LabelCollection, BodyStats> cache;
  auto stats_of = [&](const DihedralElement& e) {
    const auto h = dihedral_act(e, base);
    const auto labels = face_labels(h);
    auto it = cache.find(labels);
    if (it == cache.end()) it = cache.emplace(labels, body_stats(h, budget)).first;
    return it->second;
  };
  ScanReport r;
  for (int m = 0; m < n; ++m) {
    const auto e = DihedralElement::rotation(n, m);
    r.rotations.push_back({e, stats_of(e)});
  }
  r.rotations_agree = true;
  for (const auto& s : r.rotations) r.rotations_agree = r.rotations_agree && s.stats == r.rotations.front().stats;
  if (include_reflections) {
    for (int m = 0; m < n; ++m) {
      const DihedralElement e(n, m, true);
      r.reflections.push_back({e, stats_of(e)});
    }
    r.reflections_match_rotation_stats = true;
    for (const auto& s : r.reflections)
      r.reflections_match_rotation_stats = r.reflections_match_rotation_stats && s.stats == r.rotations.front().stats;
  }
  return r;
}

}  // namespace plabica
