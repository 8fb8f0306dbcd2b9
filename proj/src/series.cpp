#include "tridend/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tridend {

RationalSeries::RationalSeries(int order) : order_(order), coef_(static_cast<std::size_t>(order) + 1, Rational(0)) {
  if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coefficients) : RationalSeries(order) {
  for (std::size_t k = 0; k < coefficients.size() && k < coef_.size(); ++k) coef_[k] = coefficients[k];
}

RationalSeries RationalSeries::constant(int order, const Rational& c) { return monomial(order, 0, c); }

RationalSeries RationalSeries::monomial(int order, int k, const Rational& c) {
  RationalSeries s(order);
  if (k <= order) s[k] = c;
  return s;
}

namespace {

void same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("RationalSeries: truncation orders differ");
}

}  // namespace

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries operator*(const Rational& s, const RationalSeries& a) {
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = s * a[k];
  return out;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  if (b[0] == 0) throw std::domain_error("RationalSeries: division by a series without constant term");
  RationalSeries q(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Rational acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

mpz_class small_schroeder(int n) {
  if (n < 0) throw std::invalid_argument("small_schroeder: negative index");
  static std::mutex mutex;
  static std::vector<mpz_class> values{1, 1};
  std::lock_guard lock(mutex);
  while (static_cast<int>(values.size()) <= n) {
    const long m = static_cast<long>(values.size());
    mpz_class num = (6 * m - 3) * values[static_cast<std::size_t>(m - 1)] - (m - 2) * values[static_cast<std::size_t>(m - 2)];
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(m + 1))) {
      throw std::logic_error("small_schroeder: inexact division in the recurrence");
    }
    values.push_back(num / (m + 1));
  }
  return values[static_cast<std::size_t>(n)];
}

mpz_class big_schroeder(int n) {
  if (n < 0) throw std::invalid_argument("big_schroeder: negative index");
  if (n == 0) return 0;
  if (n <= 2) return 1;
  return 2 * small_schroeder(n - 2);
}

RationalSeries series_r(int order) {
  RationalSeries s(order);
  for (int n = 1; n <= order; ++n) s[n] = Rational(small_schroeder(n));
  return s;
}

RationalSeries series_p(int order) {
  RationalSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational(big_schroeder(n));
  return s;
}

RationalSeries series_prim_coass(int order) {
  // P/X needs P through X^(order+1).
  RationalSeries p = series_p(order + 1);
  RationalSeries f(order);
  for (int n = 0; n <= order; ++n) f[n] = p[n + 1];
  f[0] -= 1;
  return f;
}

Report check_series_identities(int order) {
  if (order < 3) throw std::invalid_argument("check_series_identities: order must be at least 3");
  Report report{"series identities", 0, {}};
  const RationalSeries one = RationalSeries::constant(order, 1);
  const RationalSeries x = RationalSeries::monomial(order, 1);
  const RationalSeries x2 = RationalSeries::monomial(order, 2);
  const RationalSeries r = series_r(order);
  const RationalSeries p = series_p(order);
  const RationalSeries f = series_prim_coass(order);
  auto str = [](const RationalSeries& s) {
    std::string out;
    for (const auto& c : s.coefficients()) out += (out.empty() ? "" : ",") + c.get_str();
    return out;
  };
  auto check = [&](const std::string& name, const RationalSeries& lhs, const RationalSeries& rhs) {
    ++report.checked;
    if (!(lhs == rhs)) report.fail(name, "order " + std::to_string(order), str(lhs), str(rhs));
  };
  const RationalSeries one_r = one + r;
  check("P = R/(1+R)^2", p, r / (one_r * one_r));
  check("P = X + X^2 + 2X^2 R", p, x + x2 + Rational(2) * (x2 * r));
  check("R/(1+R) = X + 2XR", r / one_r, x + Rational(2) * (x * r));
  check("P/X - 1 = R/(1+R)", f, r / one_r);
  const RationalSeries w = Rational(4) * (x * one_r) - one - x;
  check("(4X(1+R) - 1 - X)^2 = 1 - 6X + X^2", w * w, one - Rational(6) * x + x2);
  return report;
}

}  // namespace tridend
