#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plabica/errors.hpp"

namespace plabica {

class UnboundedPolytope : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

using Point = std::vector<mpq_class>;
using LatticePoint = std::vector<long long>;

/// a.x + b >= 0 with coprime integer entries.
struct Inequality {
  std::vector<mpz_class> a;
  mpz_class b;

  bool operator==(const Inequality&) const = default;
  bool operator<(const Inequality& o) const {
    if (a != o.a) return std::lexicographical_compare(a.begin(), a.end(), o.a.begin(), o.a.end());
    return b < o.b;
  }

  mpq_class value(const Point& x) const {
    mpq_class s = b;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) s += a[i] * x[i];
    return s;
  }
  mpz_class value(const LatticePoint& x) const {
    mpz_class s = b;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) s += a[i] * mpz_class(static_cast<long>(x[i]));
    return s;
  }
  bool is_trivial() const {
    return std::all_of(a.begin(), a.end(), [](const mpz_class& c) { return c == 0; });
  }
};

/// Scales a rational row to coprime integers (positive factor, direction kept).
inline Inequality canonical_row(const std::vector<mpq_class>& a, const mpq_class& b) {
  mpz_class l = 1;
  auto lcm_in = [&](const mpq_class& c) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t()); };
  for (const auto& c : a) lcm_in(c);
  lcm_in(b);
  Inequality r;
  mpz_class g = 0;
  for (const auto& c : a) {
    mpq_class s = c * l;
    r.a.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.a.back().get_mpz_t());
  }
  r.b = mpq_class(b * l).get_num();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.b.get_mpz_t());
  if (g > 1) {
    for (auto& c : r.a) c /= g;
    r.b /= g;
  }
  return r;
}

/// Polyhedron {x : a.x + b >= 0 for every row} over named coordinates.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(std::vector<std::string> coords, const std::vector<Inequality>& rows) : coords_(std::move(coords)) {
    std::set<Inequality> seen;
    for (const auto& r : rows) {
      require(r.a.size() == coords_.size(), "inequality has the wrong number of coefficients");
      std::vector<mpq_class> a(r.a.begin(), r.a.end());
      Inequality c = canonical_row(a, mpq_class(r.b));
      if (c.is_trivial()) {
        if (c.b < 0) infeasible_ = true;
        continue;
      }
      if (seen.insert(c).second) rows_.push_back(std::move(c));
    }
  }

  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<Inequality>& rows() const { return rows_; }
  /// A constant row 0 >= c with c > 0 was supplied.
  bool trivially_empty() const { return infeasible_; }

  bool contains(const Point& x) const {
    if (infeasible_) return false;
    for (const auto& r : rows_)
      if (r.value(x) < 0) return false;
    return true;
  }
  bool contains(const LatticePoint& x) const {
    if (infeasible_) return false;
    for (const auto& r : rows_)
      if (r.value(x) < 0) return false;
    return true;
  }

  /// Same rows as sets (after canonicalisation).
  bool same_system(const HPolytope& o) const {
    std::set<Inequality> a(rows_.begin(), rows_.end()), b(o.rows_.begin(), o.rows_.end());
    return dim() == o.dim() && a == b;
  }

 private:
  std::vector<std::string> coords_;
  std::vector<Inequality> rows_;
  bool infeasible_ = false;
};

namespace detail {

using Ray = std::vector<mpz_class>;

inline void make_primitive(Ray& r) {
  mpz_class g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : r) c /= g;
}

inline mpz_class dot(const Ray& h, const Ray& r) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0 && r[i] != 0) s += h[i] * r[i];
  return s;
}

/// Solves B x = e for square rational B; false if singular.
inline bool solve(std::vector<std::vector<mpq_class>> B, std::vector<mpq_class> e, std::vector<mpq_class>& x) {
  const std::size_t n = B.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && B[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(B[p], B[c]);
    std::swap(e[p], e[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || B[r][c] == 0) continue;
      const mpq_class f = B[r][c] / B[c][c];
      for (std::size_t j = c; j < n; ++j) B[r][j] -= f * B[c][j];
      e[r] -= f * e[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e[i] / B[i][i];
  return true;
}

/// Rank of a list of rational rows.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Vertices by the double description method on the homogenised cone
/// {(x, t) : a.x + b t >= 0, t >= 0}. Throws UnboundedPolytope for
/// polyhedra with recession directions; returns {} when empty.
inline std::vector<Point> vertices(const HPolytope& P) {
  using detail::Ray;
  if (P.trivially_empty()) return {};
  const std::size_t d = P.dim() + 1;
  std::vector<Ray> H;
  for (const auto& r : P.rows()) {
    Ray h(r.a.begin(), r.a.end());
    h.push_back(r.b);
    H.push_back(std::move(h));
  }
  {
    Ray t(d, 0);
    t[d - 1] = 1;
    H.push_back(std::move(t));
  }
  // Initial simplicial cone from d independent rows.
  std::vector<std::size_t> basis;
  std::vector<std::vector<mpq_class>> chosen;
  for (std::size_t i = H.size(); i-- > 0 && basis.size() < d;) {
    std::vector<mpq_class> row(H[i].begin(), H[i].end());
    chosen.push_back(row);
    if (detail::rank(chosen) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis.size() < d) throw UnboundedPolytope("polyhedron is not pointed (contains a line) or lower dimensional cone");
  const std::size_t m = H.size();
  const std::size_t words = (m + 63) / 64;
  struct RayData {
    Ray r;
    std::vector<std::uint64_t> tight;
  };
  auto tight_bit = [](std::vector<std::uint64_t>& t, std::size_t i) { t[i / 64] |= std::uint64_t{1} << (i % 64); };
  std::vector<RayData> rays;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<mpq_class> e(d, 0), x;
    e[j] = 1;
    ensure(detail::solve(chosen, e, x), "double description: singular initial basis");
    mpz_class l = 1;
    for (const auto& c : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    RayData rd{Ray(d), std::vector<std::uint64_t>(words, 0)};
    for (std::size_t i = 0; i < d; ++i) rd.r[i] = mpq_class(x[i] * l).get_num();
    detail::make_primitive(rd.r);
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) tight_bit(rd.tight, basis[i]);
    rays.push_back(std::move(rd));
  }
  std::vector<bool> done(m, false);
  for (std::size_t i : basis) done[i] = true;
  for (std::size_t hi = 0; hi < m; ++hi) {
    if (done[hi]) continue;
    done[hi] = true;
    const Ray& h = H[hi];
    std::vector<std::size_t> pos, neg;
    std::vector<RayData> next;
    std::vector<mpz_class> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = detail::dot(h, rays[i].r);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    for (const auto& p : pos) next.push_back(rays[p]);
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] == 0) {
        RayData rd = rays[i];
        tight_bit(rd.tight, hi);
        next.push_back(std::move(rd));
      }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        std::vector<std::uint64_t> z(words);
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < words; ++w) {
          z[w] = rays[p].tight[w] & rays[q].tight[w];
          cnt += static_cast<std::size_t>(__builtin_popcountll(z[w]));
        }
        if (cnt + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          bool contains = true;
          for (std::size_t w = 0; w < words && contains; ++w) contains = (z[w] & ~rays[o].tight[w]) == 0;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        RayData rd{Ray(d), z};
        for (std::size_t i = 0; i < d; ++i) rd.r[i] = val[p] * rays[q].r[i] - val[q] * rays[p].r[i];
        detail::make_primitive(rd.r);
        tight_bit(rd.tight, hi);
        next.push_back(std::move(rd));
      }
    rays = std::move(next);
  }
  std::vector<Point> out;
  bool recession = false;
  for (const auto& rd : rays) {
    const mpz_class& t = rd.r[d - 1];
    if (t == 0) {
      recession = true;
      continue;
    }
    Point x(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) x[i] = mpq_class(rd.r[i], t);
    for (auto& c : x) c.canonicalize();
    out.push_back(std::move(x));
  }
  if (out.empty()) return {};
  if (recession) throw UnboundedPolytope("polyhedron is unbounded");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Vertex oracle by brute force over all dim-subsets of rows.
inline std::vector<Point> vertices_bruteforce(const HPolytope& P) {
  const std::size_t d = P.dim();
  const auto& rows = P.rows();
  std::set<Point> out;
  if (P.trivially_empty() || rows.size() < d) return {};
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<mpq_class>> B;
    std::vector<mpq_class> e;
    for (std::size_t i : idx) {
      B.emplace_back(rows[i].a.begin(), rows[i].a.end());
      e.emplace_back(-rows[i].b);
    }
    std::vector<mpq_class> x;
    if (detail::solve(B, e, x) && P.contains(x)) {
      for (auto& c : x) c.canonicalize();
      out.insert(x);
    }
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == rows.size() - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {out.begin(), out.end()};
}

/// All integer points, by box enumeration with row checks as soon as a row's
/// last coordinate is fixed.
inline std::vector<LatticePoint> lattice_points(const HPolytope& P) {
  const auto V = vertices(P);
  if (V.empty()) return {};
  const std::size_t d = P.dim();
  std::vector<long long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpq_class mn = V.front()[i], mx = V.front()[i];
    for (const auto& v : V) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = f.get_si();
    hi[i] = c.get_si();
  }
  // Rows grouped by their last nonzero coordinate.
  std::vector<std::vector<const Inequality*>> at(d);
  for (const auto& r : P.rows()) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (r.a[i] != 0) last = i;
    at[last].push_back(&r);
  }
  std::vector<LatticePoint> out;
  LatticePoint x(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      out.push_back(x);
      return;
    }
    for (long long v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      bool ok = true;
      for (const auto* r : at[i]) {
        mpz_class s = r->b;
        for (std::size_t j = 0; j <= i; ++j)
          if (r->a[j] != 0) s += r->a[j] * mpz_class(static_cast<long>(x[j]));
        if (s < 0) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Equality as point sets, via mutual vertex containment.
inline bool polytopes_equal(const HPolytope& P, const HPolytope& Q) {
  if (P.dim() != Q.dim()) return false;
  const auto vp = vertices(P);
  const auto vq = vertices(Q);
  if (vp.empty() || vq.empty()) return vp.empty() && vq.empty();
  for (const auto& v : vp)
    if (!Q.contains(v)) return false;
  for (const auto& v : vq)
    if (!P.contains(v)) return false;
  return true;
}

/// Affine dimension of a point set.
inline std::size_t affine_dimension(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<mpq_class>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> r(pts[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(r));
  }
  return detail::rank(std::move(diffs));
}

/// Keeps facet-defining rows and implicit equalities.
inline HPolytope remove_redundant(const HPolytope& P) {
  const auto V = vertices(P);
  if (V.empty()) return P;
  const std::size_t dim = affine_dimension(V);
  std::vector<Inequality> keep;
  for (const auto& r : P.rows()) {
    std::vector<Point> tight;
    for (const auto& v : V)
      if (r.value(v) == 0) tight.push_back(v);
    if (tight.size() == V.size() || (!tight.empty() && affine_dimension(tight) + 1 == dim)) keep.push_back(r);
  }
  return HPolytope(P.coords(), keep);
}

/// x -> M x + t with M integer and unimodular.
struct AffineLatticeMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::vector<long long>> M;
  std::vector<long long> t;

  mpz_class determinant() const {
    std::vector<std::vector<mpq_class>> a;
    for (const auto& row : M) {
      std::vector<mpq_class> r;
      for (long long x : row) r.emplace_back(static_cast<long>(x));
      a.push_back(std::move(r));
    }
    const std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) return 0;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a[r][c] == 0) continue;
        const mpq_class f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      }
    }
    return det.get_num();
  }
  bool is_unimodular() const { return M.size() == M.front().size() && abs(determinant()) == 1; }

  Point apply(const Point& x) const {
    Point y(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
      y[i] = static_cast<long>(t[i]);
      for (std::size_t j = 0; j < x.size(); ++j)
        if (M[i][j] != 0) y[i] += static_cast<long>(M[i][j]) * x[j];
    }
    return y;
  }
  LatticePoint apply(const LatticePoint& x) const {
    LatticePoint y(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
      y[i] = t[i];
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += M[i][j] * x[j];
    }
    return y;
  }

  /// Integer inverse matrix; throws unless unimodular.
  std::vector<std::vector<long long>> inverse_matrix() const {
    require(is_unimodular(), "affine map is not unimodular");
    const std::size_t n = M.size();
    std::vector<std::vector<long long>> inv(n, std::vector<long long>(n));
    std::vector<std::vector<mpq_class>> B;
    for (const auto& row : M) {
      std::vector<mpq_class> r;
      for (long long x : row) r.emplace_back(static_cast<long>(x));
      B.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> e(n, 0), x;
      e[j] = 1;
      ensure(detail::solve(B, e, x), "unimodular matrix reported singular");
      for (std::size_t i = 0; i < n; ++i) {
        ensure(x[i].get_den() == 1, "inverse of a unimodular matrix must be integral");
        inv[i][j] = x[i].get_num().get_si();
      }
    }
    return inv;
  }

  AffineLatticeMap inverse() const {
    const auto inv = inverse_matrix();
    AffineLatticeMap r{target, source, inv, std::vector<long long>(t.size(), 0)};
    for (std::size_t i = 0; i < inv.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) r.t[i] -= inv[i][j] * t[j];
    return r;
  }

  /// {M x + t : x in P}.
  HPolytope image(const HPolytope& P) const {
    require(P.dim() == source.size(), "affine map source dimension mismatch");
    const auto inv = inverse_matrix();
    std::vector<Inequality> rows;
    for (const auto& r : P.rows()) {
      // a.(inv (y - t)) + b
      Inequality o;
      o.a.assign(target.size(), 0);
      for (std::size_t j = 0; j < target.size(); ++j)
        for (std::size_t i = 0; i < source.size(); ++i)
          if (r.a[i] != 0 && inv[i][j] != 0) o.a[j] += r.a[i] * mpz_class(static_cast<long>(inv[i][j]));
      o.b = r.b;
      for (std::size_t j = 0; j < target.size(); ++j) o.b -= o.a[j] * mpz_class(static_cast<long>(t[j]));
      rows.push_back(std::move(o));
    }
    return HPolytope(target, rows);
  }
};

}  // namespace plabica
