#pragma once

#include <string>
#include <vector>

#include "plabica/polytope.hpp"
#include "plabica/rational_expr.hpp"
#include "plabica/seed.hpp"

namespace plabica {

/// Exponent vectors of a Laurent polynomial with positive coefficients;
/// Trop(h)(v) = min over the vectors u of v.u.
struct TropicalForm {
  std::vector<Monomial> exponents;

  mpq_class evaluate(const std::function<mpq_class(VarId)>& v) const {
    require(!exponents.empty(), "tropicalisation of the zero polynomial");
    bool first = true;
    mpq_class best;
    for (const auto& u : exponents) {
      mpq_class s = 0;
      for (const auto& [var, e] : u.factors()) s += v(var) * e;
      if (first || s < best) best = s;
      first = false;
    }
    return best;
  }
};

inline TropicalForm tropicalize(const Polynomial& h) {
  require(!h.is_zero(), "cannot tropicalise the zero polynomial");
  require(h.has_positive_coefficients(), "tropicalisation needs nonnegative coefficients");
  TropicalForm t;
  for (const auto& [m, c] : h.terms()) t.exponents.push_back(m);
  return t;
}

inline TropicalForm tropicalize(const RationalExpr& h) {
  require(h.is_laurent(), "tropicalisation needs a Laurent polynomial");
  return tropicalize(h.laurent());
}

inline std::string coordinate_name(const KSubset& J) { return J.to_string(); }

/// {v : Trop(W)(v, r) >= 0} over the given coordinates; q has value r.
inline HPolytope tropical_polytope(const RationalExpr& W, const std::vector<KSubset>& coords, const mpq_class& r) {
  const auto trop = tropicalize(W);
  std::map<VarId, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    index.emplace(plucker_var(coords[i]), i);
    names.push_back(coordinate_name(coords[i]));
  }
  std::vector<Inequality> rows;
  for (const auto& u : trop.exponents) {
    std::vector<mpq_class> a(coords.size(), 0);
    mpq_class b = 0;
    for (const auto& [var, e] : u.factors()) {
      if (var == kQVar) {
        b += r * e;
        continue;
      }
      auto it = index.find(var);
      require(it != index.end(), "superpotential uses a variable outside the coordinate set");
      a[it->second] = e;
    }
    rows.push_back(canonical_row(a, b));
  }
  return HPolytope(std::move(names), rows);
}

}  // namespace plabica
