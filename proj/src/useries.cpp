#include "qcd/useries.hpp"

#include <algorithm>

#include "qcd/error.hpp"

namespace qcd {

USeries USeries::constant(const Rational& c, int prec) {
  if (prec < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  std::vector<Rational> v(static_cast<std::size_t>(prec));
  if (prec > 0) v[0] = c;
  return USeries(std::move(v));
}

USeries USeries::u(int prec) {
  USeries r = zero(prec);
  if (prec > 1) r.coeffs_[1] = Rational(1);
  return r;
}

USeries USeries::q(int prec) {
  USeries r = u(prec);
  if (prec > 0) r.coeffs_[0] = Rational(1);
  return r;
}

bool USeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

USeries USeries::truncated(int prec) const {
  if (prec < 0 || prec > this->prec())
    throw Error(ErrorCode::InsufficientPrecision,
                "requested u-precision " + std::to_string(prec) + " but only " +
                    std::to_string(this->prec()) + " orders are known");
  return USeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + prec));
}

USeries USeries::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return USeries(std::move(v));
}

USeries operator+(const USeries& a, const USeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> v(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) v[i] = a[i] + b[i];
  return USeries(std::move(v));
}

USeries operator-(const USeries& a, const USeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> v(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) v[i] = a[i] - b[i];
  return USeries(std::move(v));
}

USeries operator*(const USeries& a, const USeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> v(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < p; ++j)
      if (!b[j].is_zero()) v[i + j] += a[i] * b[j];
  }
  return USeries(std::move(v));
}

USeries operator*(const Rational& s, const USeries& a) {
  std::vector<Rational> v;
  v.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) v.push_back(s * c);
  return USeries(std::move(v));
}

USeries USeries::inverse() const {
  if (prec() == 0) return USeries();
  if (coeffs_[0].is_zero()) throw Error(ErrorCode::NonUnit, "u-series with zero constant term is not invertible");
  const Rational inv0 = Rational(1) / coeffs_[0];
  std::vector<Rational> r(coeffs_.size());
  r[0] = inv0;
  for (int n = 1; n < prec(); ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return USeries(std::move(r));
}

USeries USeries::divided_by_u() const {
  if (prec() == 0) throw Error(ErrorCode::InsufficientPrecision, "cannot divide an unknown u-series by u");
  if (!coeffs_[0].is_zero())
    throw Error(ErrorCode::NotDivisible, "u^0 coefficient is " + coeffs_[0].to_string() + ", not 0");
  return USeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

USeries USeries::times_u() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size() + 1);
  v.emplace_back(0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return USeries(std::move(v));
}

Rational USeries::classical_limit() const {
  if (prec() == 0) throw Error(ErrorCode::InsufficientPrecision, "q -> 1 limit of a u-series with prec 0");
  return coeffs_[0];
}

Rational USeries::evaluate_at(const Rational& u_value) const {
  Rational acc;
  for (int i = prec() - 1; i >= 0; --i) acc = acc * u_value + coeffs_[i];
  return acc;
}

bool agree(const USeries& a, const USeries& b) {
  const int p = std::min(a.prec(), b.prec());
  for (int i = 0; i < p; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

USeries log_ratio_constant(int prec) {
  if (prec < 1) throw Error(ErrorCode::InvalidArgument, "log-ratio constant needs prec >= 1");
  // log(1+u)/u = sum (-1)^k u^k / (k+1)
  std::vector<Rational> v(static_cast<std::size_t>(prec));
  for (int k = 0; k < prec; ++k) v[k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(k + 1);
  return USeries(std::move(v)).inverse();
}

}  // namespace qcd
