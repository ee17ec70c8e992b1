#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plabica/mutation_search.hpp"

namespace plabica {

/// W_i = p_{J_i^+} / p_{J_i}, i = 1..n (index 0 holds W_1).
inline std::vector<RationalExpr> superpotential_terms(PluckerExpander& ex) {
  const int k = ex.root_seed().k;
  const int n = ex.root_seed().n;
  std::vector<RationalExpr> out;
  for (int i = 1; i <= n; ++i) {
    const RationalExpr num = ex.express(superpotential_label(i, k, n));
    const RationalExpr den = ex.express(frozen_right_label(i, k, n));
    out.push_back(num / den);
  }
  return out;
}

inline std::vector<RationalExpr> superpotential_terms(const PlabicGraph& g, int budget = search_budget()) {
  PluckerExpander ex(g, budget);
  return superpotential_terms(ex);
}

/// W = sum_i W_i q^{delta_{i,k}}.
inline RationalExpr assemble_superpotential(const std::vector<RationalExpr>& terms, int k) {
  RationalExpr w;
  for (std::size_t i = 0; i < terms.size(); ++i)
    w += static_cast<int>(i) + 1 == k ? terms[i] * RationalExpr::var(kQVar) : terms[i];
  return w;
}

inline RationalExpr superpotential(const PlabicGraph& g, int budget = search_budget()) {
  return assemble_superpotential(superpotential_terms(g, budget), g.k());
}

// Orbit families of the (dual) checkboard graph with closed superpotential formulas.

enum class OrbitFamily { ch_rot, ch_refl, dual_ch_rot, dual_ch_refl, ch_base };

inline const char* orbit_family_name(OrbitFamily f) {
  switch (f) {
    case OrbitFamily::ch_rot: return "ch-rot";
    case OrbitFamily::ch_refl: return "ch-refl";
    case OrbitFamily::dual_ch_rot: return "dual-ch-rot";
    case OrbitFamily::dual_ch_refl: return "dual-ch-refl";
    case OrbitFamily::ch_base: return "ch-base";
  }
  return "?";
}

inline OrbitFamily parse_orbit_family(const std::string& s) {
  for (auto f : {OrbitFamily::ch_rot, OrbitFamily::ch_refl, OrbitFamily::dual_ch_rot, OrbitFamily::dual_ch_refl, OrbitFamily::ch_base})
    if (s == orbit_family_name(f)) return f;
  throw PreconditionError("unknown orbit family '" + s + "'");
}

inline bool is_dual(OrbitFamily f) { return f == OrbitFamily::dual_ch_rot || f == OrbitFamily::dual_ch_refl; }
inline bool is_reflection(OrbitFamily f) { return f == OrbitFamily::ch_refl || f == OrbitFamily::dual_ch_refl; }

/// sigma^m or sigma^m rho with rho = x -> n+1-x.
inline DihedralElement orbit_element(OrbitFamily f, int m, int n) {
  if (f == OrbitFamily::ch_base) return DihedralElement::identity(n);
  if (is_reflection(f)) return {n, m + n - 1, true};
  return DihedralElement::rotation(n, m);
}

inline PlabicGraph orbit_graph(OrbitFamily f, int m, int k, int n) {
  require_grassmannian_range(k, n);
  const auto base = build_family(is_dual(f) ? Family::dual_checkboard : Family::checkboard, k, n);
  return dihedral_act(orbit_element(f, m, n), base);
}

/// Grid of the y-coordinates: rows 0..R, columns 0..C.
inline int closed_form_rows(OrbitFamily f, int k, int n) {
  return (f == OrbitFamily::ch_refl || f == OrbitFamily::dual_ch_rot) ? k : n - k;
}
inline int closed_form_cols(OrbitFamily f, int k, int n) { return n - closed_form_rows(f, k, n); }

/// Sums run over anti-diagonals a + b = d instead of diagonals a - b = d.
inline bool uses_anti_diagonals(OrbitFamily f) { return f == OrbitFamily::ch_refl || f == OrbitFamily::dual_ch_rot; }

/// Right label of y_{i,j}.
inline KSubset closed_form_label(OrbitFamily f, int m, int k, int n, int i, int j) {
  const int R = closed_form_rows(f, k, n);
  const int C = closed_form_cols(f, k, n);
  require(i >= 0 && i <= R && j >= 0 && j <= C, "closed-form grid position out of range");
  auto seg = [n](int x) { return initial_segment(std::clamp(x, 0, n), n); };
  const KSubset all = seg(n);
  const int h = ceil_half(i + j);
  switch (f) {
    case OrbitFamily::ch_base: return KSubset::shifted(seg(i) | (seg(n - k + j) - seg(i + j)), -h);
    case OrbitFamily::ch_rot: return KSubset::shifted(seg(i) | (seg(n - k + j) - seg(i + j)), -h + m);
    case OrbitFamily::ch_refl: return KSubset::shifted((all - seg(n - j)) | (seg(n - j - i) - seg(k - i)), h + m);
    case OrbitFamily::dual_ch_rot: return KSubset::shifted((all - seg(k + j)) | (seg(i + j) - seg(i)), -h + m);
    case OrbitFamily::dual_ch_refl: return KSubset::shifted(seg(n - k - i) | (seg(n - j) - seg(n - i - j)), h + m);
  }
  throw InternalError("unknown orbit family");
}

/// delta_{m, x/2} with the argument taken mod n; zero unless x/2 is an integer.
inline int delta_half(int m, int twice, int n) {
  if (twice % 2 != 0) return 0;
  return wrap(m, n) == wrap(twice / 2, n) ? 1 : 0;
}

/// One Laurent monomial of a closed formula: product of y_{i,j}^e times q^q.
struct ClosedTerm {
  std::vector<std::pair<std::pair<int, int>, int>> factors;
  int q = 0;
};

/// Exponents of q on the two boundary terms and on diagonal d.
struct QPlacement {
  int first = 0;
  int second = 0;
  std::map<int, int> diagonal;
};

inline QPlacement closed_form_q(OrbitFamily f, int m, int k, int n) {
  QPlacement p;
  const bool anti = uses_anti_diagonals(f);
  const int lo = anti ? 1 : 1 - k;
  const int hi = anti ? n - 2 : n - k - 2;
  for (int d = lo; d <= hi; ++d) {
    int e = 0;
    switch (f) {
      case OrbitFamily::ch_base: e = d == 0 ? 1 : 0; break;
      case OrbitFamily::ch_rot: e = delta_half(m, -d, n) + delta_half(m, d + 1 + 2 * k, n); break;
      case OrbitFamily::ch_refl: e = delta_half(m, d, n) + delta_half(m, -(d + 1), n); break;
      case OrbitFamily::dual_ch_rot: e = delta_half(m, -d, n) + delta_half(m, d + 1, n); break;
      case OrbitFamily::dual_ch_refl: e = delta_half(m, d + 2 * k, n) + delta_half(m, -(d + 1), n); break;
    }
    p.diagonal[d] = e;
  }
  switch (f) {
    case OrbitFamily::ch_base: break;
    case OrbitFamily::ch_rot:
      p.first = delta_half(m, 2 * ceil_half(k), n);
      p.second = delta_half(m, 2 * ceil_half(n + k), n);
      break;
    case OrbitFamily::ch_refl:
      p.first = delta_half(m, 0, n);
      p.second = delta_half(m, 2 * floor_half(n), n);
      break;
    case OrbitFamily::dual_ch_rot:
      p.first = delta_half(m, 0, n);
      p.second = delta_half(m, 2 * ceil_half(n), n);
      break;
    case OrbitFamily::dual_ch_refl:
      p.first = delta_half(m, 2 * floor_half(k), n);
      p.second = delta_half(m, 2 * floor_half(n + k), n);
      break;
  }
  return p;
}

/// The closed formula as a list of monomials in the y_{i,j}.
inline std::vector<ClosedTerm> closed_form_terms(OrbitFamily f, int m, int k, int n) {
  require_grassmannian_range(k, n);
  const int R = closed_form_rows(f, k, n);
  const int C = closed_form_cols(f, k, n);
  const auto q = closed_form_q(f, m, k, n);
  auto ok = [&](int i, int j) { return i >= 0 && i <= R && j >= 0 && j <= C; };
  std::vector<ClosedTerm> out;
  auto push = [&](std::vector<std::pair<int, int>> up, std::vector<std::pair<int, int>> down, int qe) {
    for (const auto& p : up)
      if (!ok(p.first, p.second)) return;
    for (const auto& p : down)
      if (!ok(p.first, p.second)) return;
    ClosedTerm t;
    for (const auto& p : up) t.factors.push_back({p, 1});
    for (const auto& p : down) t.factors.push_back({p, -1});
    t.q = qe;
    out.push_back(std::move(t));
  };
  if (!uses_anti_diagonals(f)) {
    push({{1, C - 1}}, {{0, C}}, q.first);
    push({{R - 1, 1}}, {{R, 0}}, q.second);
    for (const auto& [d, e] : q.diagonal)
      for (int a = 0; a <= R; ++a) {
        const int b = a - d;
        push({{a, b + 1}, {a + 1, b - 1}}, {{a, b}, {a + 1, b}}, e);
        push({{a - 1, b}, {a + 1, b - 1}}, {{a, b - 1}, {a, b}}, e);
      }
  } else {
    // The printed boundary terms only make sense for k = n-k; these are the
    // images of the checkboard ones under j -> C - j.
    push({{1, 1}}, {{0, 0}}, q.first);
    push({{R - 1, C - 1}}, {{R, C}}, q.second);
    for (const auto& [d, e] : q.diagonal)
      for (int a = 0; a <= R; ++a) {
        const int b = d - a;
        push({{a, b - 1}, {a + 1, b + 1}}, {{a, b}, {a + 1, b}}, e);
        push({{a - 1, b}, {a + 1, b + 1}}, {{a, b}, {a, b + 1}}, e);
      }
  }
  return out;
}

inline RationalExpr closed_form_W(OrbitFamily f, int m, int k, int n) {
  RationalExpr w;
  for (const auto& t : closed_form_terms(f, m, k, n)) {
    RationalExpr term = t.q ? RationalExpr(Polynomial::var(kQVar, t.q)) : RationalExpr(1L);
    for (const auto& [pos, e] : t.factors) {
      const RationalExpr y = plucker_symbol(closed_form_label(f, m, k, n, pos.first, pos.second), k);
      term = e > 0 ? term * y : term / y;
    }
    w += term;
  }
  return w;
}

/// W for sigma^m G^ch_{k,n} from the diagonal sequences alone.
inline RationalExpr checkboard_superpotential_by_diagonals(int k, int n, int m) {
  const auto plus = checkboard_plus_expressions(k, n, m);
  std::vector<RationalExpr> terms;
  for (int i = 1; i <= n; ++i) {
    auto it = plus.find(superpotential_label(i, k, n));
    require(it != plus.end(), "diagonal sequences did not reach " + superpotential_label(i, k, n).to_string());
    terms.push_back(it->second / plucker_symbol(frozen_right_label(i, k, n), k));
  }
  return assemble_superpotential(terms, k);
}

}  // namespace plabica
