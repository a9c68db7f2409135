#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "qcd/error.hpp"
#include "qcd/rational.hpp"
#include "qcd/useries.hpp"

namespace qcd {

// Coefficient-ring hooks. A zero "like" x carries x's u-precision.
inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline USeries ring_zero_like(const USeries& x) { return USeries::zero(x.prec()); }
inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline USeries ring_one_like(const USeries& x) { return USeries::one(x.prec()); }
inline bool ring_is_zero(const Rational& x) { return x.is_zero(); }
inline bool ring_is_zero(const USeries& x) { return x.is_zero(); }
inline Rational ring_inverse(const Rational& x) {
  if (x.is_zero()) throw Error(ErrorCode::NonUnit, "zero constant term");
  return Rational(1) / x;
}
inline USeries ring_inverse(const USeries& x) { return x.inverse(); }

/// Truncated power series in t: coefficients of t^0 .. t^order over a
/// coefficient ring R (Rational or USeries). Raw t-coefficients only; any
/// t^n/n! normalization is the caller's business.
template <class R>
class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "t-series needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  TSeries truncated(int order) const {
    if (order < 0 || order > this->order())
      throw Error(ErrorCode::InvalidArgument, "cannot extend a t-series by truncation");
    return TSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend TSeries operator+(const TSeries& f, const TSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<R> v;
    v.reserve(n + 1);
    for (int i = 0; i <= n; ++i) v.push_back(f[i] + g[i]);
    return TSeries(std::move(v));
  }

  friend TSeries operator-(const TSeries& f, const TSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<R> v;
    v.reserve(n + 1);
    for (int i = 0; i <= n; ++i) v.push_back(f[i] - g[i]);
    return TSeries(std::move(v));
  }

  TSeries operator-() const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return TSeries(std::move(v));
  }

  // Cauchy product truncated at min order.
  friend TSeries operator*(const TSeries& f, const TSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<R> v;
    v.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      R acc = f[0] * g[k];
      for (int i = 1; i <= k; ++i)
        if (!ring_is_zero(f[i])) acc = acc + f[i] * g[k - i];
      v.push_back(std::move(acc));
    }
    return TSeries(std::move(v));
  }

  friend TSeries operator*(const Rational& s, const TSeries& f) {
    std::vector<R> v;
    v.reserve(f.coeffs_.size());
    for (const auto& c : f.coeffs_) v.push_back(s * c);
    return TSeries(std::move(v));
  }

  friend TSeries operator*(const R& s, const TSeries& f)
    requires(!std::is_same_v<R, Rational>)
  {
    std::vector<R> v;
    v.reserve(f.coeffs_.size());
    for (const auto& c : f.coeffs_) v.push_back(s * c);
    return TSeries(std::move(v));
  }

  friend bool operator==(const TSeries& f, const TSeries& g) = default;

 private:
  std::vector<R> coeffs_;
};

using RSeries = TSeries<Rational>;
using QSeries = TSeries<USeries>;

/// t * f. Order grows by one.
template <class R>
TSeries<R> times_t(const TSeries<R>& f) {
  std::vector<R> v;
  v.reserve(f.order() + 2);
  v.push_back(ring_zero_like(f[0]));
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return TSeries<R>(std::move(v));
}

/// f / t; requires a vanishing constant term. Order drops by one.
template <class R>
TSeries<R> divided_by_t(const TSeries<R>& f) {
  if (!ring_is_zero(f[0])) throw Error(ErrorCode::NotDivisible, "t-series has nonzero constant term");
  if (f.order() == 0) throw Error(ErrorCode::InvalidArgument, "order-0 series cannot be divided by t");
  return TSeries<R>(std::vector<R>(f.coeffs().begin() + 1, f.coeffs().end()));
}

/// Multiplicative inverse for a unit constant term.
template <class R>
TSeries<R> inverse(const TSeries<R>& f) {
  const R inv0 = ring_inverse(f[0]);
  std::vector<R> r;
  r.reserve(f.order() + 1);
  r.push_back(inv0);
  for (int n = 1; n <= f.order(); ++n) {
    R acc = f[1] * r[n - 1];
    for (int k = 2; k <= n; ++k) acc = acc + f[k] * r[n - k];
    r.push_back(-(acc * inv0));
  }
  return TSeries<R>(std::move(r));
}

template <class R>
TSeries<R> power(const TSeries<R>& f, unsigned k) {
  std::vector<R> one(f.order() + 1, ring_zero_like(f[0]));
  one[0] = ring_one_like(f[0]);
  TSeries<R> acc(std::move(one));
  for (unsigned i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

/// f(g(t)), truncated at min order. NonzeroInnerConstant unless g(0) = 0.
template <class R>
TSeries<R> compose(const TSeries<R>& f, const TSeries<R>& g) {
  if (!ring_is_zero(g[0])) throw Error(ErrorCode::NonzeroInnerConstant, "inner series must have zero constant term");
  const int n = std::min(f.order(), g.order());
  const TSeries<R> inner = g.truncated(n);
  // Horner: f_n, then acc*g + f_k.
  std::vector<R> start(n + 1, ring_zero_like(g[0]));
  TSeries<R> acc(std::move(start));
  for (int k = n; k >= 0; --k) {
    std::vector<R> fk(n + 1, ring_zero_like(g[0]));
    fk[0] = f[k];
    acc = acc * inner + TSeries<R>(std::move(fk));
  }
  return acc;
}

/// Embeds a rational series into Q[[u]] coefficients at the given precision.
QSeries lift(const RSeries& f, int prec);

/// Coefficientwise u-truncation.
QSeries truncate_u(const QSeries& f, int prec);

/// Smallest u-precision among the coefficients.
int min_prec(const QSeries& f);

/// sqrt(1-4t) = 1 - 2 sum C_m t^{m+1}, built from Catalan numbers.
RSeries sqrt_one_minus_4t(int order);

/// log(1-4t) = -sum_{k>=1} 4^k t^k / k.
RSeries log_one_minus_4t(int order);

/// log(1+t).
RSeries log_one_plus_t(int order);

/// exp(scale * t).
RSeries exp_series(int order, const Rational& scale);

/// (1+t)^lambda via the binomial series.
RSeries binomial_series(int order, const Rational& lambda);

/// Classical Catalan-Daehee generating function (1/2)log(1-4t)/(sqrt(1-4t)-1).
/// Both sides vanish at t = 0; t is cancelled before an ordinary inversion.
RSeries classical_catalan_daehee_gf(int order);

/// Solves den * X = num in Q[[u]][[t]] where den(0) = u * (unit).
///
/// Each coefficient step divides an exactly-computed residue by u, so X_n
/// knows (input precision - n - 1) u-orders. The call is refused with
/// InsufficientPrecision unless every X_n will know at least
/// `min_output_prec` orders. A non-u-divisible residue raises NotDivisible
/// with the offending step. After solving, den * X - num is recomputed and
/// must vanish at every known order (IdentityViolation otherwise).
QSeries gf_solve_u_pivot(const QSeries& num, const QSeries& den, int min_output_prec);

}  // namespace qcd
