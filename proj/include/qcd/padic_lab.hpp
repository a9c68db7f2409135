#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcd/padic.hpp"
#include "qcd/useries.hpp"

namespace qcd {

enum class Integrand {
  ConstantOne,   // 1
  Monomial,      // x^n
  HalfPower,     // s^x with s = sqrt(1 - 4t)
  HalfBinomial,  // binom(x/2, n)
};

struct IntegralSpec {
  Integrand integrand = Integrand::ConstantOne;
  int n = 0;
  std::optional<PadicNumber> t;  // HalfPower only; valuation(t) >= 1

  static IntegralSpec constant_one() { return {}; }
  static IntegralSpec monomial(int n) { return {Integrand::Monomial, n, std::nullopt}; }
  static IntegralSpec half_power(const PadicNumber& t) { return {Integrand::HalfPower, 0, t}; }
  static IntegralSpec half_binomial(int n) { return {Integrand::HalfBinomial, n, std::nullopt}; }

  std::string name() const;
};

struct RiemannOptions {
  std::int64_t max_terms = 390625;  // 5^8
  unsigned threads = 1;
};

/// [p^N]_q = (q^{p^N} - 1)/(q - 1), or p^N when q = 1.
PadicNumber q_integer_p_power(const PadicNumber& q, int N);

/// (q - 1)/log q, or 1 when q = 1.
PadicNumber padic_log_ratio(const PadicNumber& q);

/// S_N = (1/[p^N]_q) sum_{x < p^N} f(x) q^x by direct summation.
///
/// q = 1 (every known digit) selects the Volkenborn weights 1/p^N; otherwise
/// valuation(q - 1) >= 1 is required. The precision of q and t sets the
/// working precision. With threads > 1 the x-range is split into contiguous
/// chunks whose partial sums are added in order; the result is bit-identical
/// to the sequential sum. BudgetExceeded when p^N > max_terms.
PadicNumber riemann_sum(const IntegralSpec& spec, const PadicNumber& q, int N, const RiemannOptions& opts = {});

/// Closed form of S_N for f(x) = s^x:
/// (q-1)((sq)^{p^N} - 1) / ((q^{p^N} - 1)(sq - 1)). DegenerateRatio when sq = 1.
PadicNumber geometric_sum(const PadicNumber& s, const PadicNumber& q, int N);

/// The q-integral of (1-4t)^{x/2}:
/// (q - 1 + L (1/2) log(1-4t)) / (q sqrt(1-4t) - 1), L = (q-1)/log q;
/// at q = 1, (1/2) log(1-4t) / (sqrt(1-4t) - 1), with value 1 at t = 0.
PadicNumber closed_form_eq12(const PadicNumber& q, const PadicNumber& t);

/// S_N for N = 1..N_max, with the valuation of S_N - S_{N-1} from N = 2 on.
struct ConvergenceRow {
  int N = 0;
  PadicNumber value;
  std::optional<DifferenceValuation> step;
};
std::vector<ConvergenceRow> convergence_table(const IntegralSpec& spec, const PadicNumber& q, int N_max,
                                              const RiemannOptions& opts = {});

/// Nondecreasing valuations, where a bounded (fully cancelled) entry counts
/// as at least its bound.
bool nondecreasing(const std::vector<DifferenceValuation>& vals);

/// Riemann sum against a u-series specialized at u = q - 1.
struct MomentReport {
  bool pass = false;
  PadicNumber riemann;
  PadicNumber specialized;
  PadicNumber::Index modulus = 0;
  /// The modulus with K valuation(q-1) standing for the tail.
  PadicNumber::Index stated_modulus = 0;
  PadicNumber::Index tail = 0;
  PadicNumber::Index stated_tail = 0;
  DifferenceValuation agreement;
  PadicNumber::Index convergence_order = 0;
  std::string detail;
};

/// Compares riemann_sum(spec, q, N) with sum_{j<K} expected[j] (q-1)^j.
///
/// The modulus is p^min(tail, precision of both sides, valuation(S_N - S_{N-1})).
/// tail starts at K valuation(q-1) and drops to the smallest valuation of
/// expected[j] (q-1)^j over the known coefficients K <= j < expected.prec(),
/// since those coefficients may have p in their denominators. At q = 1 only
/// expected[0] is used.
MomentReport integral_crosscheck(const IntegralSpec& spec, const PadicNumber& q, int N, const USeries& expected,
                                 int K, const RiemannOptions& opts = {});

/// integral_crosscheck of x^n against B_{n,q}.
MomentReport moment_crosscheck(int n, const PadicNumber& q, int N, const USeries& bq, int K,
                               const RiemannOptions& opts = {});

/// q * integral f(x+1) - integral f(x) against (q-1) f(0) + L f'(0), f = x^n,
/// with f(x+1) expanded binomially into monomial Riemann sums at level N.
struct FunctionalEquationReport {
  bool pass = false;
  PadicNumber lhs;
  PadicNumber rhs;
  PadicNumber::Index modulus = 0;
  DifferenceValuation agreement;
  std::string detail;
};
FunctionalEquationReport functional_equation_check(int n, const PadicNumber& q, int N,
                                                   const RiemannOptions& opts = {});

/// The exact rational value of a u-series' known terms at u = q - 1, as a p-adic number.
PadicNumber specialize(const USeries& series, const Rational& u_value, long p, int digits);

}  // namespace qcd
