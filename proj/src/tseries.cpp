#include "qcd/tseries.hpp"

#include <limits>

#include "qcd/combinatorics.hpp"

namespace qcd {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative t-order");
}

}  // namespace

QSeries lift(const RSeries& f, int prec) {
  std::vector<USeries> v;
  v.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) v.push_back(USeries::constant(c, prec));
  return QSeries(std::move(v));
}

QSeries truncate_u(const QSeries& f, int prec) {
  std::vector<USeries> v;
  v.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) v.push_back(c.truncated(prec));
  return QSeries(std::move(v));
}

int min_prec(const QSeries& f) {
  int p = std::numeric_limits<int>::max();
  for (const auto& c : f.coeffs()) p = std::min(p, c.prec());
  return p;
}

RSeries sqrt_one_minus_4t(int order) {
  require_order(order);
  std::vector<Rational> v(order + 1);
  v[0] = Rational(1);
  for (int m = 0; m + 1 <= order; ++m) v[m + 1] = Rational(-2) * catalan(m);
  return RSeries(std::move(v));
}

RSeries log_one_minus_4t(int order) {
  require_order(order);
  std::vector<Rational> v(order + 1);
  for (int k = 1; k <= order; ++k) v[k] = -pow(Rational(4), k) / Rational(k);
  return RSeries(std::move(v));
}

RSeries log_one_plus_t(int order) {
  require_order(order);
  std::vector<Rational> v(order + 1);
  for (int k = 1; k <= order; ++k) v[k] = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
  return RSeries(std::move(v));
}

RSeries exp_series(int order, const Rational& scale) {
  require_order(order);
  std::vector<Rational> v(order + 1);
  Rational term(1);
  for (int k = 0; k <= order; ++k) {
    v[k] = term;
    term = term * scale / Rational(k + 1);
  }
  return RSeries(std::move(v));
}

RSeries binomial_series(int order, const Rational& lambda) {
  require_order(order);
  std::vector<Rational> v(order + 1);
  Rational c(1);
  for (int k = 0; k <= order; ++k) {
    v[k] = c;
    c = c * (lambda - Rational(k)) / Rational(k + 1);
  }
  return RSeries(std::move(v));
}

RSeries classical_catalan_daehee_gf(int order) {
  require_order(order);
  const RSeries num = Rational(1, 2) * log_one_minus_4t(order + 1);
  RSeries den = sqrt_one_minus_4t(order + 1);
  std::vector<Rational> shifted(den.coeffs());
  shifted[0] -= Rational(1);
  den = RSeries(std::move(shifted));
  return divided_by_t(num) * inverse(divided_by_t(den));
}

QSeries gf_solve_u_pivot(const QSeries& num, const QSeries& den, int min_output_prec) {
  const int order = std::min(num.order(), den.order());
  const int in_prec = std::min(min_prec(num.truncated(order)), min_prec(den.truncated(order)));
  if (in_prec - order - 1 < min_output_prec)
    throw Error(ErrorCode::InsufficientPrecision,
                "u-pivot solve to t-order " + std::to_string(order) + " needs input precision " +
                    std::to_string(min_output_prec + order + 1) + ", got " + std::to_string(in_prec));

  USeries unit;
  try {
    unit = den[0].divided_by_u();
  } catch (const Error&) {
    throw Error(ErrorCode::NonPivotDenominator, "denominator constant term is not divisible by u");
  }
  if (unit.prec() == 0 || unit[0].is_zero())
    throw Error(ErrorCode::NonPivotDenominator, "denominator constant term is not u times a unit");
  const USeries unit_inv = unit.inverse();

  std::vector<USeries> x;
  x.reserve(order + 1);
  for (int n = 0; n <= order; ++n) {
    USeries residue = num[n];
    for (int k = 1; k <= n; ++k) residue -= den[k] * x[n - k];
    try {
      x.push_back(residue.divided_by_u() * unit_inv);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::NotDivisible, "u-pivot step t^" + std::to_string(n) + ": " + e.what());
    }
  }
  QSeries solution(std::move(x));

  // den * X - num, with den(0) * X_n taken as u * (unit * X_n).
  for (int n = 0; n <= order; ++n) {
    USeries lhs = (unit * solution[n]).times_u();
    for (int k = 1; k <= n; ++k) lhs += den[k] * solution[n - k];
    if (!(lhs - num[n]).is_zero())
      throw Error(ErrorCode::IdentityViolation, "u-pivot re-multiplication check failed at t^" + std::to_string(n));
  }
  if (min_prec(solution) < min_output_prec)
    throw Error(ErrorCode::InsufficientPrecision, "u-pivot solve delivered less precision than requested");
  return solution;
}

}  // namespace qcd
