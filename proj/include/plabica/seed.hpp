#pragma once

#include <map>
#include <string>

#include "plabica/grassmann.hpp"
#include "plabica/quiver.hpp"
#include "plabica/rational_expr.hpp"

namespace plabica {

/// Labelled A-seed over the Plücker field of Gr(n-k, n). Vertices are right
/// labels ((n-k)-subsets); variables are expressions in the initial symbols.
struct Seed {
  int k = 0;
  int n = 0;
  Quiver quiver;
  std::map<KSubset, RationalExpr> variables;
  bool normalized = true;  // p_{J_n} = 1

  const RationalExpr& variable(const KSubset& J) const {
    auto it = variables.find(J);
    require(it != variables.end(), "seed has no variable " + J.to_string());
    return it->second;
  }
  bool has(const KSubset& J) const { return variables.count(J) != 0; }
};

/// Symbol p_J, or 1 for J = J_n under normalisation.
inline RationalExpr plucker_symbol(const KSubset& J, int k, bool normalized = true) {
  if (normalized && J == frozen_right_label(J.n(), k, J.n())) return RationalExpr(1L);
  return RationalExpr::var(plucker_var(J));
}

inline Quiver right_label_quiver(const Quiver& left) {
  Quiver q;
  for (const auto& [v, f] : left.vertices()) q.add_vertex(v.complement(), f);
  for (const auto& [a, m] : left.arrows()) q.add_arrows(a.first.complement(), a.second.complement(), m);
  return q;
}

inline Seed seed_from_graph(const PlabicGraph& g, bool normalized = true) {
  Seed s;
  s.k = g.k();
  s.n = g.n();
  s.normalized = normalized;
  s.quiver = right_label_quiver(quiver_from_graph(g));
  for (const auto& [J, frozen] : s.quiver.vertices()) s.variables.emplace(J, plucker_symbol(J, s.k, normalized));
  ensure(s.has(frozen_right_label(s.n, s.k, s.n)), "seed lacks the frozen label J_n");
  return s;
}

/// Label of the new vertex after mutating at w: union of the neighbours minus (w minus their intersection).
inline KSubset exchanged_label(const Quiver& q, const KSubset& w) {
  const auto ins = q.in_neighbours(w);
  const auto outs = q.out_neighbours(w);
  require(ins.size() == 2 && outs.size() == 2, "label mutation needs two in- and two out-neighbours at " + w.to_string());
  KSubset uni = KSubset::from_mask(w.n(), 0);
  KSubset inter = KSubset::from_mask(w.n(), KSubset::full_mask(w.n()));
  for (const auto* side : {&ins, &outs})
    for (const auto& [v, m] : *side) {
      require(m == 1, "label mutation needs simple arrows at " + w.to_string());
      uni = uni | v;
      inter = inter & v;
    }
  return uni - (w - inter);
}

/// Exchange relation a_w a'_w = prod_{v->w} a_v + prod_{w->v} a_v at right label J.
inline Seed mutate_seed(const Seed& s, const KSubset& J) {
  require(s.has(J), "seed has no variable " + J.to_string());
  require(!s.quiver.is_frozen(J), "variable " + J.to_string() + " is frozen");
  RationalExpr in(1L), out(1L);
  for (const auto& [v, m] : s.quiver.in_neighbours(J))
    for (int i = 0; i < m; ++i) in *= s.variable(v);
  for (const auto& [v, m] : s.quiver.out_neighbours(J))
    for (int i = 0; i < m; ++i) out *= s.variable(v);
  const KSubset added = exchanged_label(s.quiver, J);
  Seed r;
  r.k = s.k;
  r.n = s.n;
  r.normalized = s.normalized;
  r.quiver = mutate_quiver(s.quiver, J).relabelled(J, added);
  r.variables = s.variables;
  r.variables.erase(J);
  r.variables.emplace(added, (in + out) / s.variable(J));
  return r;
}

/// Renames every Plücker symbol by a dihedral element (q is left alone).
inline Polynomial relabel_polynomial(const Polynomial& p, const DihedralElement& g) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm;
    for (const auto& [v, e] : m.factors()) {
      const VarId w = (v == kQVar || is_matrix_entry_var(v)) ? v : plucker_var(g.apply(KSubset::from_mask(g.n(), v)));
      mm = mm * Monomial::var(w, e);
    }
    r.add_term(mm, c);
  }
  return r;
}

inline RationalExpr relabel_expr(const RationalExpr& e, const DihedralElement& g) {
  return {relabel_polynomial(e.numerator(), g), relabel_polynomial(e.denominator(), g)};
}

/// Readable text, e.g. "p{1,2}*p{3,4}^-1 + q*p{2,4}".
inline std::string monomial_text(const Monomial& m, int n) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    if (v == kQVar)
      s += "q";
    else if (is_matrix_entry_var(v))
      s += "x" + std::to_string((v >> 8) & 0xff) + "_" + std::to_string(v & 0xff);
    else
      s += "p" + KSubset::from_mask(n, v).to_string();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::string polynomial_text(const Polynomial& p, int n) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.get_str();
    if (!s.empty()) {
      if (c < 0) {
        s += " - ";
        coeff = mpz_class(-c).get_str();
      } else {
        s += " + ";
      }
    }
    if (m.is_one()) {
      s += coeff;
    } else {
      if (coeff != "1") s += (coeff == "-1" ? std::string("-") : coeff + "*");
      s += monomial_text(m, n);
    }
  }
  return s;
}

inline std::string expr_text(const RationalExpr& e, int n) {
  if (e.is_laurent()) return polynomial_text(e.numerator(), n);
  return "(" + polynomial_text(e.numerator(), n) + ")/(" + polynomial_text(e.denominator(), n) + ")";
}

}  // namespace plabica
