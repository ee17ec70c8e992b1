#pragma once

#include <utility>

#include "plabica/polynomial.hpp"

namespace plabica {

/// Quotient of two Laurent polynomials. Kept normalized: whenever the
/// denominator divides the numerator the denominator becomes 1, monomial
/// factors of the denominator are moved into the numerator, integer
/// content is cancelled and the denominator has positive leading coefficient.
/// Laurent values therefore have a unique representation; equality is
/// decided by cross-multiplication in all cases.
class RationalExpr {
 public:
  RationalExpr() : num_(0L), den_(1L) {}
  RationalExpr(const Polynomial& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalExpr(long c) : num_(c), den_(1L) {}               // NOLINT(google-explicit-constructor)
  RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "rational expression with zero denominator");
    normalize();
  }
  static RationalExpr var(VarId v) { return RationalExpr(Polynomial::var(v)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == Polynomial(1L); }

  /// The Laurent polynomial equal to this expression; throws if there is none.
  const Polynomial& laurent() const {
    require(is_laurent(), "expression is not a Laurent polynomial");
    return num_;
  }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
    require(!b.is_zero(), "division by zero expression");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
  RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }

  bool operator==(const RationalExpr& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
  }

  mpq_class evaluate(const std::function<mpq_class(VarId)>& value) const {
    const mpq_class d = den_.evaluate(value);
    require(d != 0, "expression denominator vanishes at this point");
    return num_.evaluate(value) / d;
  }

  /// Laurent polynomial with positive integer coefficients.
  bool is_positive_laurent() const { return is_laurent() && num_.has_positive_coefficients(); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1L);
      return;
    }
    const Monomial m = den_.monomial_content();
    if (!m.is_one()) {
      num_ = num_.times(m.inverse());
      den_ = den_.times(m.inverse());
    }
    Polynomial q;
    if (!den_.is_constant() && divide_exact(num_, den_, q)) {
      num_ = std::move(q);
      den_ = Polynomial(1L);
      return;
    }
    mpz_class g = num_.integer_content();
    const mpz_class gd = den_.integer_content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    if (den_.leading_coefficient() < 0) g = -g;
    if (g != 1) {
      Polynomial nn, dd;
      divide_exact(num_, Polynomial(g), nn);
      divide_exact(den_, Polynomial(g), dd);
      num_ = std::move(nn);
      den_ = std::move(dd);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace plabica
