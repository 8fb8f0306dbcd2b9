#pragma once

#include <gmpxx.h>

#include <vector>

#include "tridend/linear.hpp"
#include "tridend/report.hpp"

namespace tridend {

/// Power series truncated after X^order, with exact coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order);
  RationalSeries(int order, std::vector<Rational> coefficients);

  static RationalSeries constant(int order, const Rational& c);
  /// X^k.
  static RationalSeries monomial(int order, int k, const Rational& c = 1);

  int order() const { return order_; }
  const Rational& operator[](int k) const { return coef_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coef_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coefficients() const { return coef_; }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const Rational& s, const RationalSeries& a);
  /// Requires a nonzero constant term in the divisor.
  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coef_ == b.coef_; }

 private:
  int order_;
  std::vector<Rational> coef_;
};

/// a_n: (n+1)a_n = (6n-3)a_{n-1} - (n-2)a_{n-2}, a_0 = a_1 = 1.
mpz_class small_schroeder(int n);
/// A_0 = 0, A_1 = A_2 = 1, A_n = 2a_{n-2}.
mpz_class big_schroeder(int n);

/// R = Σ_{n>=1} a_n X^n.
RationalSeries series_r(int order);
/// P = Σ A_n X^n.
RationalSeries series_p(int order);
/// F = P/X - 1, the series of dim Prim_Coass.
RationalSeries series_prim_coass(int order);

/// P = R/(1+R)², P = X + X² + 2X²R, R/(1+R) = X + 2XR, P/X - 1 = R/(1+R)
/// and (4X(1+R) - 1 - X)² = 1 - 6X + X², all through X^order.
Report check_series_identities(int order);

}  // namespace tridend
