#include "qcd/q_families.hpp"

#include <algorithm>

#include "qcd/combinatorics.hpp"
#include "qcd/error.hpp"

namespace qcd {

namespace {

Rational minus_one_pow(int n) { return Rational(n % 2 == 0 ? 1 : -1); }

// Working value of a t-series coefficient with the n! normalization applied.
USeries egf_coefficient(const QSeries& s, int n) { return factorial(static_cast<unsigned>(n)) * s[n]; }

IdentityReport compare(const USeries& lhs, const USeries& rhs, const std::string& what) {
  IdentityReport r;
  r.compared_prec = std::min(lhs.prec(), rhs.prec());
  r.holds = agree(lhs, rhs);
  r.detail = what + (r.holds ? " holds" : " FAILS") + " at u-precision " + std::to_string(r.compared_prec);
  if (!r.holds) {
    for (int i = 0; i < r.compared_prec; ++i)
      if (lhs[i] != rhs[i]) {
        r.detail += "; first mismatch at u^" + std::to_string(i) + ": " + lhs[i].to_string() + " vs " +
                    rhs[i].to_string();
        break;
      }
  }
  return r;
}

}  // namespace

void QFamilyConfig::validate() const {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (u_prec < 1) throw Error(ErrorCode::InvalidArgument, "u_prec must be >= 1");
  if (guard < n_max + 1)
    throw Error(ErrorCode::InvalidArgument,
                "guard " + std::to_string(guard) + " cannot cover the u-divisions of t-orders up to " +
                    std::to_string(n_max) + " (need guard >= n_max + 1)");
}

QFamilies::QFamilies(QFamilyConfig cfg) : cfg_(cfg) { cfg_.validate(); }

QFamilies::~QFamilies() = default;

void QFamilies::check_index(int n) const {
  if (n < 0 || n > cfg_.n_max)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(n) + " outside 0.." + std::to_string(cfg_.n_max));
}

USeries QFamilies::deliver(const USeries& v) const { return v.truncated(cfg_.u_prec); }
XPoly QFamilies::deliver(const XPoly& v) const { return v.truncated(cfg_.u_prec); }

const std::vector<RSeries>& QFamilies::log_powers_one_plus_t() const {
  std::call_once(logpow_once_, [&] {
    const RSeries lg = log_one_plus_t(cfg_.n_max);
    RSeries acc = power(lg, 0);
    for (int l = 0; l <= cfg_.n_max; ++l) {
      log_powers_.push_back(Rational(1) / factorial(l) * acc);
      acc = acc * lg;
    }
  });
  return log_powers_;
}

// --- q-Bernoulli -----------------------------------------------------------

USeries QFamilies::q_bernoulli_working(int n) const {
  check_index(n);
  std::call_once(bernoulli_once_, [&] {
    const int P = cfg_.working_prec();
    const int N = cfg_.n_max;
    const USeries L = log_ratio_constant(P);
    std::vector<USeries> num(N + 1, USeries::zero(P));
    num[0] = USeries::u(P);
    if (N >= 1) num[1] = L;
    QSeries den = USeries::q(P) * lift(exp_series(N, Rational(1)), P);
    std::vector<USeries> d(den.coeffs());
    d[0] -= USeries::one(P);
    const QSeries x = gf_solve_u_pivot(QSeries(std::move(num)), QSeries(std::move(d)), cfg_.u_prec);
    for (int k = 0; k <= N; ++k) bernoulli_.push_back(egf_coefficient(x, k));
  });
  return bernoulli_[n];
}

USeries QFamilies::q_bernoulli_recurrence_working(int n) const {
  check_index(n);
  std::call_once(bernoulli_rec_once_, [&] {
    const int P = cfg_.working_prec();
    const USeries q = USeries::q(P);
    const USeries L = log_ratio_constant(P);
    for (int m = 0; m <= cfg_.n_max; ++m) {
      USeries rhs = m == 0 ? USeries::u(P) : (m == 1 ? L : USeries::zero(P));
      USeries sum = USeries::zero(P);
      for (int k = 0; k < m; ++k) sum += Rational(binomial_int(m, k)) * bernoulli_rec_[k];
      // (q-1) B_m = rhs - q sum_{k<m} binom(m,k) B_k
      USeries residue = rhs - q * sum;
      try {
        bernoulli_rec_.push_back(residue.divided_by_u());
      } catch (const Error& e) {
        throw Error(ErrorCode::NotDivisible, "q-Bernoulli recurrence at n=" + std::to_string(m) + ": " + e.what());
      }
    }
  });
  return bernoulli_rec_[n];
}

USeries QFamilies::q_bernoulli(int n) const { return deliver(q_bernoulli_working(n)); }
USeries QFamilies::q_bernoulli_recurrence(int n) const { return deliver(q_bernoulli_recurrence_working(n)); }

IdentityReport QFamilies::bernoulli_routes_check(int n) const {
  return compare(q_bernoulli_working(n), q_bernoulli_recurrence_working(n),
                 "B_{" + std::to_string(n) + ",q}: generating function = recurrence");
}

// --- Daehee families -------------------------------------------------------

const QSeries& QFamilies::daehee_gf_solution(DaeheeType type, const Rational& lambda) const {
  const auto key = std::make_pair(type == DaeheeType::One ? 1 : 2, lambda.to_string());
  {
    std::lock_guard lock(daehee_mu_);
    if (auto it = daehee_solutions_.find(key); it != daehee_solutions_.end()) return *it->second;
  }
  const int P = cfg_.working_prec();
  const int N = cfg_.n_max;
  const USeries q = USeries::q(P);
  const USeries L = log_ratio_constant(P);
  // type 1: (2(q-1) + lambda L log(1+t)) / (q^2 (1+t)^lambda - 1)
  // type 2: ((q-1) + lambda L log(1+t)) / (q (1+t)^lambda - 1)
  const USeries lead = type == DaeheeType::One ? Rational(2) * USeries::u(P) : USeries::u(P);
  const USeries scale = type == DaeheeType::One ? q * q : q;
  QSeries num = (lambda * L) * lift(log_one_plus_t(N), P);
  std::vector<USeries> nv(num.coeffs());
  nv[0] += lead;
  QSeries den = scale * lift(binomial_series(N, lambda), P);
  std::vector<USeries> dv(den.coeffs());
  dv[0] -= USeries::one(P);
  auto solved = std::make_shared<const QSeries>(
      gf_solve_u_pivot(QSeries(std::move(nv)), QSeries(std::move(dv)), cfg_.u_prec));

  std::lock_guard lock(daehee_mu_);
  auto [it, inserted] = daehee_solutions_.emplace(key, std::move(solved));
  return *it->second;
}

XPoly QFamilies::daehee_poly_working(DaeheeType type, int n, const Rational& lambda) const {
  check_index(n);
  const int P = cfg_.working_prec();
  const QSeries& a = daehee_gf_solution(type, lambda);
  const auto& logs = log_powers_one_plus_t();
  // (1+t)^{c x} = sum_l (c x)^l log(1+t)^l / l!, c = lambda (type 1) or 1 (type 2).
  std::vector<USeries> coeffs;
  for (int l = 0; l <= n; ++l) {
    const QSeries prod = a.truncated(n) * lift(logs[l].truncated(n), P);
    Rational c = factorial(n);
    if (type == DaeheeType::One) c *= pow(lambda, l);
    coeffs.push_back(c * prod[n]);
  }
  return XPoly(std::move(coeffs));
}

USeries QFamilies::daehee_type1_number_working(int n, const Rational& lambda) const {
  check_index(n);
  return egf_coefficient(daehee_gf_solution(DaeheeType::One, lambda), n);
}

USeries QFamilies::daehee_type2_number_working(int n, const Rational& lambda) const {
  check_index(n);
  return egf_coefficient(daehee_gf_solution(DaeheeType::Two, lambda), n);
}

XPoly QFamilies::daehee_type1(int n, const Rational& lambda) const {
  return deliver(daehee_poly_working(DaeheeType::One, n, lambda));
}

XPoly QFamilies::daehee_type2(int n, const Rational& lambda) const {
  return deliver(daehee_poly_working(DaeheeType::Two, n, lambda));
}

// --- q-Catalan-Daehee numbers ----------------------------------------------

USeries QFamilies::qcd_direct_working(int n) const {
  check_index(n);
  std::call_once(dnq_once_, [&] {
    const int P = cfg_.working_prec();
    const int N = cfg_.n_max;
    const USeries q = USeries::q(P);
    // (q-1 + L (1/2) log(1-4t)) / (q sqrt(1-4t) - 1)
    QSeries num = (Rational(1, 2) * log_ratio_constant(P)) * lift(log_one_minus_4t(N), P);
    std::vector<USeries> nv(num.coeffs());
    nv[0] += USeries::u(P);
    QSeries den = q * lift(sqrt_one_minus_4t(N), P);
    std::vector<USeries> dv(den.coeffs());
    dv[0] -= USeries::one(P);
    dnq_gf_ = gf_solve_u_pivot(QSeries(std::move(nv)), QSeries(std::move(dv)), cfg_.u_prec);
    dnq_ = dnq_gf_.coeffs();
  });
  return dnq_[n];
}

USeries QFamilies::qcd_theorem1_working(int n) const {
  check_index(n);
  const int P = cfg_.working_prec();
  if (n == 0) return USeries::one(P);
  const Rational one(1);
  auto weighted = [&](int k) {
    // (-4)^k / k! D_{k,q}(0|1)
    return (pow(Rational(-4), k) / factorial(k)) * daehee_type1_number_working(k, one);
  };
  const USeries two_q = USeries::constant(Rational(2), P) + USeries::u(P);  // [2]_q
  USeries result = (Rational(1, 2) * two_q) * weighted(n);
  USeries sum = USeries::zero(P);
  for (int m = 0; m < n; ++m) sum += catalan(m) * weighted(n - m - 1);
  result -= USeries::q(P) * sum;
  return result;
}

USeries QFamilies::qcd_theorem2_working(int n) const {
  check_index(n);
  const int P = cfg_.working_prec();
  const auto s1 = stirling_table(StirlingKind::FirstSigned, n);
  USeries sum = USeries::zero(P);
  for (int m = 0; m <= n; ++m) {
    const BigInt& s = s1->at(n, m);
    if (s == 0) continue;
    sum += (pow(Rational(2), 2 * n - m) * Rational(s)) * q_bernoulli_working(m);
  }
  // (-1)^n d_{n,q} = sum / n!
  return (minus_one_pow(n) / factorial(n)) * sum;
}

USeries QFamilies::qcd_direct(int n) const { return deliver(qcd_direct_working(n)); }
USeries QFamilies::qcd_theorem1(int n) const { return deliver(qcd_theorem1_working(n)); }
USeries QFamilies::qcd_theorem2(int n) const { return deliver(qcd_theorem2_working(n)); }

IdentityReport QFamilies::catalan_daehee_routes_check(int n) const {
  const USeries direct = qcd_direct_working(n);
  IdentityReport a = compare(direct, qcd_theorem1_working(n), "d_{" + std::to_string(n) + ",q}: direct = Catalan-number route");
  IdentityReport b = compare(direct, qcd_theorem2_working(n), "direct = Bernoulli-Stirling route");
  return {a.holds && b.holds, std::min(a.compared_prec, b.compared_prec), a.detail + "; " + b.detail};
}

USeries QFamilies::corollary3_value(int n) const {
  check_index(n);
  const int P = cfg_.working_prec();
  const USeries via_dnq = (minus_one_pow(n) * pow(Rational(2), -2 * n)) * qcd_direct_working(n);
  const auto s1 = stirling_table(StirlingKind::FirstSigned, n);
  USeries sum = USeries::zero(P);
  for (int m = 0; m <= n; ++m)
    sum += (pow(Rational(1, 2), m) * Rational(s1->at(n, m))) * q_bernoulli_working(m);
  const USeries via_bernoulli = (Rational(1) / factorial(n)) * sum;
  const IdentityReport r = compare(via_dnq, via_bernoulli, "binom(x/2," + std::to_string(n) + ") integral");
  if (!r.holds || r.compared_prec < cfg_.u_prec) throw Error(ErrorCode::IdentityViolation, r.detail);
  return deliver(via_dnq);
}

IdentityReport QFamilies::eq20_relation(int n) const {
  check_index(n);
  const USeries rhs = (minus_one_pow(n) * pow(Rational(4), n) / factorial(n)) *
                      daehee_type2_number_working(n, Rational(1, 2));
  return compare(qcd_direct_working(n), rhs, "d_{" + std::to_string(n) + ",q} = (-1)^n 4^n/n! D_{n,q,1/2}");
}

IdentityReport QFamilies::theorem4_check(int n) const {
  check_index(n);
  const int P = cfg_.working_prec();
  const auto s2 = stirling_table(StirlingKind::Second, n);
  USeries rhs = USeries::zero(P);
  for (int k = 0; k <= n; ++k) {
    const BigInt& s = s2->at(n, k);
    if (s == 0) continue;
    const Rational w = minus_one_pow(k) * pow(Rational(2), n - 2 * k) * factorial(k) * Rational(s);
    rhs += w * qcd_direct_working(k);
  }
  return compare(q_bernoulli_working(n), rhs, "B_{" + std::to_string(n) + ",q} = Stirling-2 sum of d_{k,q}");
}

IdentityReport QFamilies::eq21_composition_check(int order) const {
  check_index(order);
  qcd_direct_working(0);
  const int P = cfg_.working_prec();
  const QSeries d = dnq_gf_.truncated(order);
  // (1 - e^{2t})/4
  std::vector<Rational> g = exp_series(order, Rational(2)).coeffs();
  for (auto& c : g) c = -c / Rational(4);
  g[0] = Rational(0);
  const QSeries composed = compose(d, lift(RSeries(std::move(g)), P));
  IdentityReport total{true, P, ""};
  for (int n = 0; n <= order; ++n) {
    const USeries expected = (Rational(1) / factorial(n)) * q_bernoulli_working(n);
    const IdentityReport r = compare(composed[n], expected, "t^" + std::to_string(n));
    total.compared_prec = std::min(total.compared_prec, r.compared_prec);
    if (!r.holds) {
      total.holds = false;
      total.detail += r.detail + "; ";
    }
  }
  total.detail += "composition through t^" + std::to_string(order) + (total.holds ? " holds" : " FAILS") +
                  " at u-precision " + std::to_string(total.compared_prec);
  return total;
}

// --- q-Catalan-Daehee polynomials ------------------------------------------

XPoly QFamilies::qcd_poly_direct_working(int n) const {
  check_index(n);
  qcd_direct_working(0);
  const int P = cfg_.working_prec();
  const QSeries d = dnq_gf_.truncated(n);
  const RSeries lg = log_one_minus_4t(n);
  RSeries lg_pow = power(lg, 0);
  std::vector<USeries> coeffs;
  for (int l = 0; l <= n; ++l) {
    // (x/2)^l log(1-4t)^l / l!
    const QSeries prod = d * lift(lg_pow, P);
    coeffs.push_back((pow(Rational(2), -l) / factorial(l)) * prod[n]);
    lg_pow = lg_pow * lg;
  }
  return XPoly(std::move(coeffs));
}

XPoly QFamilies::qcd_poly_theorem5_working(int n) const {
  check_index(n);
  const int P = cfg_.working_prec();
  const auto s1 = stirling_table(StirlingKind::FirstSigned, n);
  std::vector<USeries> coeffs;
  for (int l = 0; l <= n; ++l) {
    USeries c = USeries::zero(P);
    for (int m = l; m <= n; ++m) {
      const BigInt& s = s1->at(m, l);
      if (s == 0) continue;
      const Rational w = minus_one_pow(m) * pow(Rational(2), 2 * m - l) / factorial(m) * Rational(s);
      c += w * qcd_direct_working(n - m);
    }
    coeffs.push_back(std::move(c));
  }
  return XPoly(std::move(coeffs));
}

XPoly QFamilies::qcd_poly_direct(int n) const { return deliver(qcd_poly_direct_working(n)); }
XPoly QFamilies::qcd_poly_theorem5(int n) const { return deliver(qcd_poly_theorem5_working(n)); }

IdentityReport QFamilies::polynomial_routes_check(int n) const {
  const XPoly a = qcd_poly_direct_working(n);
  const XPoly b = qcd_poly_theorem5_working(n);
  IdentityReport r;
  r.compared_prec = std::min(a.prec(), b.prec());
  r.holds = agree(a, b) && a.degree() <= n && b.degree() <= n;
  r.detail = "d_{" + std::to_string(n) + ",q}(x): direct = Stirling expansion " + (r.holds ? "holds" : "FAILS") +
             " (degree " + std::to_string(a.degree()) + ", u-precision " + std::to_string(r.compared_prec) + ")";
  return r;
}

}  // namespace qcd
