#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plabica/superpotential.hpp"
#include "plabica/tropical.hpp"

namespace plabica {

/// Coordinates R_G: right labels of G except J_n, sorted.
inline std::vector<KSubset> polytope_coordinates(const PlabicGraph& g) {
  std::vector<KSubset> out;
  const KSubset jn = frozen_right_label(g.n(), g.k(), g.n());
  for (const auto& J : right_labels(g))
    if (J != jn) out.push_back(J);
  return out;
}

/// Gamma_G^r from the superpotential expressed in the seed of G.
inline HPolytope superpotential_polytope(const PlabicGraph& g, const mpq_class& r = 1, int budget = search_budget()) {
  return tropical_polytope(superpotential(g, budget), polytope_coordinates(g), r);
}

inline std::string gt_coordinate(int a, int b) { return "f{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

/// Position of f_{a,b} in the coordinate order (a = 0..n-k-1, b = 1..k).
inline std::size_t gt_index(int k, int a, int b) { return static_cast<std::size_t>(a * k + (b - 1)); }

/// GT^1_{k,n}: 1 >= f_{0,k}, f_{n-k-1,1} >= 0, f_{a,b} <= f_{a,b+1}, f_{a,b} <= f_{a-1,b}.
inline HPolytope gt_polytope(int k, int n) {
  require_grassmannian_range(k, n);
  const int R = n - k;
  std::vector<std::string> names;
  for (int a = 0; a < R; ++a)
    for (int b = 1; b <= k; ++b) names.push_back(gt_coordinate(a, b));
  const std::size_t d = names.size();
  std::vector<Inequality> rows;
  auto row = [&](std::vector<std::pair<std::size_t, int>> coeffs, long b) {
    Inequality r{std::vector<mpz_class>(d, 0), b};
    for (const auto& [i, c] : coeffs) r.a[i] += c;
    rows.push_back(std::move(r));
  };
  row({{gt_index(k, 0, k), -1}}, 1);
  row({{gt_index(k, R - 1, 1), 1}}, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 1; b <= k; ++b) {
      if (b < k) row({{gt_index(k, a, b + 1), 1}, {gt_index(k, a, b), -1}}, 0);
      if (a > 0) row({{gt_index(k, a - 1, b), 1}, {gt_index(k, a, b), -1}}, 0);
    }
  return HPolytope(std::move(names), rows);
}

/// The unimodular map taking Gamma_G to GT^1_{k,n} for G in the (dual)
/// checkboard orbit. The y-grid is read as a checkboard-shaped grid z
/// (columns reversed for the anti-diagonal families); then
/// f_{a,b} = w_{a,b} - w_{a+1,b-1} on z, transposed when z has k rows, plus a
/// translation f_{a,b} + delta_{a-b < d} fixed by the diagonal carrying q.
inline AffineLatticeMap unimodular_map_F(OrbitFamily f, int m, int k, int n) {
  require_grassmannian_range(k, n);
  const int R = closed_form_rows(f, k, n);
  const int C = closed_form_cols(f, k, n);
  const bool anti = uses_anti_diagonals(f);
  const auto g = orbit_graph(f, m, k, n);
  const auto coords = polytope_coordinates(g);
  std::map<KSubset, std::size_t> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index.emplace(coords[i], i);
  const KSubset jn = frozen_right_label(n, k, n);
  auto z = [&](int i, int j) { return closed_form_label(f, m, k, n, i, anti ? C - j : j); };

  // Diagonal of z carrying q: -inf (first boundary term), +inf (second) or d.
  const auto q = closed_form_q(f, m, k, n);
  int carriers = q.first + q.second;
  std::optional<int> qdiag;
  for (const auto& [d, e] : q.diagonal) {
    ensure(e == 0 || e == 1, "q exponent outside {0,1}");
    if (e == 1) {
      qdiag = anti ? d - C : d;
      ++carriers;
    }
  }
  ensure(carriers == 1, "closed formula must carry q exactly once");
  auto shift = [&](int a, int b) -> long long {
    if (q.first) return 0;
    if (q.second) return 1;
    return a - b < *qdiag ? 1 : 0;
  };

  AffineLatticeMap F;
  for (const auto& c : coords) F.source.push_back(coordinate_name(c));
  F.target = gt_polytope(k, n).coords();
  const std::size_t d = coords.size();
  F.M.assign(d, std::vector<long long>(d, 0));
  F.t.assign(d, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 1; b <= C; ++b) {
      // z has R rows; GT_{k,n} has n-k rows. Transpose when they differ in role.
      const std::size_t row = anti ? gt_index(k, n - k - b, k - a) : gt_index(k, a, b);
      auto add = [&](const KSubset& J, int c) {
        if (J == jn) return;
        auto it = index.find(J);
        ensure(it != index.end(), "closed-form label " + J.to_string() + " is not a coordinate of the graph");
        F.M[row][it->second] += c;
      };
      add(z(a, b), 1);
      add(z(a + 1, b - 1), -1);
      F.t[row] = shift(a, b);
    }
  return F;
}

/// Which (dual) checkboard orbit member G is, if any.
inline std::optional<std::pair<OrbitFamily, int>> identify_orbit_member(const PlabicGraph& g) {
  const int k = g.k(), n = g.n();
  const auto labels = face_labels(g);
  for (auto f : {OrbitFamily::ch_rot, OrbitFamily::ch_refl, OrbitFamily::dual_ch_rot, OrbitFamily::dual_ch_refl}) {
    const auto base = family_label_formula(is_dual(f) ? Family::dual_checkboard : Family::checkboard, k, n);
    for (int m = 1; m <= n; ++m)
      if (orbit_element(f, m, n).apply(base) == labels) return std::pair{f, m};
  }
  return std::nullopt;
}

struct GtCheck {
  OrbitFamily family = OrbitFamily::ch_rot;
  int m = 0;
  bool unimodular = false;
  bool equal = false;
  std::size_t lattice_points = 0;     // of Delta_G
  std::size_t gt_lattice_points = 0;  // of GT^1_{k,n}
  bool ok() const { return unimodular && equal && lattice_points == gt_lattice_points; }
};

/// F(Gamma_G) = GT^1_{k,n} for G in the (dual) checkboard orbit, with lattice counts cross-checked.
inline GtCheck check_no_body_is_gt(const PlabicGraph& g, int budget = search_budget()) {
  const auto member = identify_orbit_member(g);
  require(member.has_value(), "graph is not in the orbit of a (dual) checkboard graph");
  GtCheck out;
  out.family = member->first;
  out.m = member->second;
  const auto gamma = superpotential_polytope(g, 1, budget);
  const auto F = unimodular_map_F(out.family, out.m, g.k(), g.n());
  const auto gt = gt_polytope(g.k(), g.n());
  out.unimodular = F.is_unimodular();
  if (!out.unimodular) return out;
  out.equal = polytopes_equal(F.image(gamma), gt);
  out.lattice_points = lattice_points(gamma).size();
  out.gt_lattice_points = lattice_points(gt).size();
  return out;
}

}  // namespace plabica
