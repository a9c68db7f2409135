#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcd/rational.hpp"
#include "qcd/tseries.hpp"
#include "qcd/useries.hpp"
#include "qcd/xpoly.hpp"

namespace qcd {

/// n_max: largest index served. u_prec: delivered u-precision of every
/// returned value. guard: extra u-orders carried internally; each
/// generating-function coefficient t^n costs n+1 orders, so guard must be
/// at least n_max + 1.
struct QFamilyConfig {
  int n_max = 8;
  int u_prec = 8;
  int guard = 10;

  static QFamilyConfig with_default_guard(int n_max, int u_prec) { return {n_max, u_prec, n_max + 2}; }

  int working_prec() const { return u_prec + guard; }
  /// InvalidArgument on a malformed configuration.
  void validate() const;
};

/// Outcome of an exact identity check.
struct IdentityReport {
  bool holds = false;
  int compared_prec = 0;  // u-orders that were compared
  std::string detail;
};

/// The q-number families: q-Bernoulli numbers, both Daehee-type families,
/// the q-Catalan-Daehee numbers and polynomials, and the identities that
/// tie them together.
///
/// Generating functions are solved once for all n <= n_max at the working
/// precision u_prec + guard and memoized; the memo is invisible to callers
/// and safe under concurrent use. Returned values use the families' own
/// normalizations (B_{n,q}, D_{n,q}(x|lambda) and D_{n,q,lambda}(x) come
/// from t^n/n! generating functions, d_{n,q} and d_{n,q}(x) from t^n) and
/// are truncated to exactly u_prec known orders.
class QFamilies {
 public:
  explicit QFamilies(QFamilyConfig cfg);
  ~QFamilies();
  QFamilies(const QFamilies&) = delete;
  QFamilies& operator=(const QFamilies&) = delete;

  const QFamilyConfig& config() const { return cfg_; }

  /// B_{n,q} from ((q-1) + L t)/(q e^t - 1), L = (q-1)/log q.
  USeries q_bernoulli(int n) const;
  /// B_{n,q} from q(B_q + 1)^n - B_{n,q} = [q-1, L, 0, 0, ...].
  USeries q_bernoulli_recurrence(int n) const;

  /// (q,lambda)-Daehee polynomial D_{n,q}(x|lambda).
  XPoly daehee_type1(int n, const Rational& lambda) const;
  /// q-analogue of the lambda-Daehee polynomial D_{n,q,lambda}(x).
  XPoly daehee_type2(int n, const Rational& lambda) const;

  /// d_{n,q} straight from its generating function.
  USeries qcd_direct(int n) const;
  /// d_{n,q} from (q,1)-Daehee numbers and Catalan numbers.
  USeries qcd_theorem1(int n) const;
  /// d_{n,q} from q-Bernoulli numbers and signed Stirling numbers of the first kind.
  USeries qcd_theorem2(int n) const;

  /// Integral of binom(x/2, n): computes (-1)^n 4^{-n} d_{n,q} and
  /// (1/n!) sum_m 2^{-m} B_{m,q} S_1(n,m) independently; IdentityViolation
  /// if they differ, otherwise returns the common value.
  USeries corollary3_value(int n) const;

  /// d_{n,q} = (-1)^n 4^n/n! D_{n,q,1/2}.
  IdentityReport eq20_relation(int n) const;
  /// B_{n,q} = sum_k (-1)^k 2^{n-2k} k! S_2(n,k) d_{k,q}.
  IdentityReport theorem4_check(int n) const;
  /// sum_k d_{k,q} ((1 - e^{2t})/4)^k = sum_n B_{n,q} t^n/n!, through t^order.
  IdentityReport eq21_composition_check(int order) const;
  /// q_bernoulli(n) = q_bernoulli_recurrence(n) at the working precision.
  IdentityReport bernoulli_routes_check(int n) const;
  /// qcd_direct(n) = qcd_theorem1(n) = qcd_theorem2(n) at the working precision.
  IdentityReport catalan_daehee_routes_check(int n) const;
  /// qcd_poly_direct(n) = qcd_poly_theorem5(n) at the working precision.
  IdentityReport polynomial_routes_check(int n) const;

  /// d_{n,q}(x): the d_{n,q} series times (1-4t)^{x/2} = exp((x/2) log(1-4t)).
  XPoly qcd_poly_direct(int n) const;
  /// d_{n,q}(x) from the Stirling-number expansion in powers of x.
  XPoly qcd_poly_theorem5(int n) const;

  // Working-precision values (before truncation to u_prec).
  USeries q_bernoulli_working(int n) const;
  USeries q_bernoulli_recurrence_working(int n) const;
  USeries qcd_direct_working(int n) const;
  USeries qcd_theorem1_working(int n) const;
  USeries qcd_theorem2_working(int n) const;
  USeries daehee_type1_number_working(int n, const Rational& lambda) const;
  USeries daehee_type2_number_working(int n, const Rational& lambda) const;
  XPoly qcd_poly_direct_working(int n) const;
  XPoly qcd_poly_theorem5_working(int n) const;

 private:
  enum class DaeheeType { One, Two };

  void check_index(int n) const;
  USeries deliver(const USeries& v) const;
  XPoly deliver(const XPoly& v) const;
  const QSeries& daehee_gf_solution(DaeheeType type, const Rational& lambda) const;
  XPoly daehee_poly_working(DaeheeType type, int n, const Rational& lambda) const;
  const std::vector<RSeries>& log_powers_one_plus_t() const;

  QFamilyConfig cfg_;

  mutable std::once_flag bernoulli_once_, bernoulli_rec_once_, dnq_once_, logpow_once_;
  mutable std::vector<USeries> bernoulli_, bernoulli_rec_, dnq_;
  mutable QSeries dnq_gf_;
  mutable std::vector<RSeries> log_powers_;
  mutable std::mutex daehee_mu_;
  mutable std::map<std::pair<int, std::string>, std::shared_ptr<const QSeries>> daehee_solutions_;
};

}  // namespace qcd
