#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plabica/errors.hpp"

namespace plabica {

using VarId = std::uint64_t;

/// Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int e = 1) {
    Monomial m;
    if (e != 0) m.f_.emplace_back(v, e);
    return m;
  }

  const std::vector<std::pair<VarId, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree(VarId v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::pair<VarId, int>{v, INT32_MIN});
    return (it != f_.end() && it->first == v) ? it->second : 0;
  }
  int total_degree() const {
    int t = 0;
    for (const auto& [v, e] : f_) t += e;
    return t;
  }

  Monomial operator*(const Monomial& o) const { return combine(o, 1); }
  Monomial operator/(const Monomial& o) const { return combine(o, -1); }
  Monomial inverse() const {
    Monomial m = *this;
    for (auto& [v, e] : m.f_) e = -e;
    return m;
  }
  Monomial pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m = *this;
    for (auto& [v, e] : m.f_) e *= k;
    return m;
  }

  /// Componentwise minimum of exponents (the monomial gcd for Laurent monomials).
  static Monomial min(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
      if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
        if (a.f_[i].second < 0) m.f_.push_back(a.f_[i]);
        ++i;
      } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
        if (b.f_[j].second < 0) m.f_.push_back(b.f_[j]);
        ++j;
      } else {
        const int e = std::min(a.f_[i].second, b.f_[j].second);
        if (e != 0) m.f_.emplace_back(a.f_[i].first, e);
        ++i;
        ++j;
      }
    }
    return m;
  }

  bool operator==(const Monomial&) const = default;

 private:
  Monomial combine(const Monomial& o, int sign) const {
    Monomial m;
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
      if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
        m.f_.push_back(f_[i++]);
      } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
        m.f_.emplace_back(o.f_[j].first, sign * o.f_[j].second);
        ++j;
      } else {
        const int e = f_[i].second + sign * o.f_[j].second;
        if (e != 0) m.f_.emplace_back(f_[i].first, e);
        ++i;
        ++j;
      }
    }
    return m;
  }

  std::vector<std::pair<VarId, int>> f_;
};

/// Lexicographic monomial order, smaller variable ids weigh more. It is a
/// group order on Laurent monomials, so leading terms multiply.
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto& x = a.factors();
    const auto& y = b.factors();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      VarId v;
      int ea = 0, eb = 0;
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        v = x[i].first;
        ea = x[i++].second;
      } else if (i == x.size() || y[j].first < x[i].first) {
        v = y[j].first;
        eb = y[j++].second;
      } else {
        v = x[i].first;
        ea = x[i++].second;
        eb = y[j++].second;
      }
      (void)v;
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, LexLess>;

  Polynomial() = default;
  Polynomial(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) t_[Monomial{}] = c;
  }
  explicit Polynomial(const mpz_class& c) {
    if (c != 0) t_[Monomial{}] = c;
  }
  Polynomial(const Monomial& m, const mpz_class& c = 1) {  // NOLINT(google-explicit-constructor)
    if (c != 0) t_[m] = c;
  }
  static Polynomial var(VarId v, int e = 1) { return Polynomial(Monomial::var(v, e)); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  const Monomial& leading_monomial() const { return t_.rbegin()->first; }
  const mpz_class& leading_coefficient() const { return t_.rbegin()->second; }
  const Monomial& trailing_monomial() const { return t_.begin()->first; }

  void add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial times(const Monomial& m, const mpz_class& c = 1) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, cc * c);
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r(1L), b = *this;
    while (k) {
      if (k & 1U) r *= b;
      k >>= 1U;
      if (k) b *= b;
    }
    return r;
  }

  /// Monomial gcd of all terms (componentwise minimum exponent).
  Monomial monomial_content() const {
    require(!is_zero(), "content of the zero polynomial");
    Monomial m = t_.begin()->first;
    for (const auto& [mm, c] : t_) m = Monomial::min(m, mm);
    return m;
  }
  mpz_class integer_content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  bool has_positive_coefficients() const {
    for (const auto& [m, c] : t_)
      if (c <= 0) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto a = t_.begin();
    auto b = o.t_.begin();
    for (; a != t_.end(); ++a, ++b)
      if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
  }

  /// Evaluation with exact rationals; every variable that occurs must be assigned.
  mpq_class evaluate(const std::function<mpq_class(VarId)>& value) const {
    mpq_class sum = 0;
    std::map<VarId, mpq_class> cache;
    for (const auto& [m, c] : t_) {
      mpq_class term = c;
      for (const auto& [v, e] : m.factors()) {
        auto it = cache.find(v);
        if (it == cache.end()) it = cache.emplace(v, value(v)).first;
        const mpq_class& x = it->second;
        if (e < 0) require(x != 0, "evaluation at a zero of a denominator variable");
        mpq_class p = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= x;
        term *= e < 0 ? mpq_class(1 / p) : p;
      }
      sum += term;
    }
    return sum;
  }

  /// Replaces variables by polynomials (only nonnegative exponents may be substituted by non-monomials).
  Polynomial substitute(const std::function<const Polynomial*(VarId)>& value) const {
    Polynomial r;
    for (const auto& [m, c] : t_) {
      Polynomial term(Monomial{}, c);
      Monomial keep;
      for (const auto& [v, e] : m.factors()) {
        const Polynomial* p = value(v);
        if (!p) {
          keep = keep * Monomial::var(v, e);
          continue;
        }
        if (e > 0) {
          term *= p->pow(static_cast<unsigned>(e));
        } else {
          require(p->is_monomial(), "cannot substitute a non-monomial for a variable with negative exponent");
          const auto& [pm, pc] = *p->t_.begin();
          require(pc == 1 || pc == -1, "substituted monomial must have unit coefficient under a negative exponent");
          term = term.times(pm.pow(e), (-e) % 2 == 1 ? pc : mpz_class(1));
        }
      }
      r += term.times(keep);
    }
    return r;
  }

 private:
  Terms t_;
};

/// Exact division a / b in the Laurent polynomial ring, or false if b does not divide a.
inline bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
  require(!b.is_zero(), "division by the zero polynomial");
  quotient = Polynomial{};
  if (a.is_zero()) return true;
  if (b.is_monomial()) {
    const auto& [bm, bc] = *b.terms().begin();
    Polynomial q;
    for (const auto& [m, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), bc.get_mpz_t())) return false;
      q.add_term(m / bm, c / bc);
    }
    quotient = std::move(q);
    return true;
  }
  // Every quotient term lies between trail(a)/trail(b) and lead(a)/lead(b).
  const Monomial lowest = a.trailing_monomial() / b.trailing_monomial();
  LexLess less;
  Polynomial r = a;
  Polynomial q;
  while (!r.is_zero()) {
    const Monomial m = r.leading_monomial() / b.leading_monomial();
    if (less(m, lowest)) return false;
    const mpz_class& lc = r.leading_coefficient();
    if (!mpz_divisible_p(lc.get_mpz_t(), b.leading_coefficient().get_mpz_t())) return false;
    const mpz_class c = lc / b.leading_coefficient();
    q.add_term(m, c);
    r -= b.times(m, c);
  }
  quotient = std::move(q);
  return true;
}

}  // namespace plabica
