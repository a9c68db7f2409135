#include "qcd/padic_lab.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "qcd/error.hpp"

namespace qcd {

namespace {

using Index = PadicNumber::Index;
constexpr Index kInfinite = std::numeric_limits<Index>::max();

PadicNumber one_like(const PadicNumber& x) { return PadicNumber::from_integer(x.prime(), 1, std::max(x.digits(), 1)); }

PadicNumber exact_value(long p, const Rational& r, int digits) {
  return r.is_zero() ? PadicNumber::exact_zero(p) : PadicNumber::from_rational(p, r, digits);
}

BigInt p_power(long p, int N) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
  return r;
}

// Integer representative p^v * unit of a value with nonnegative valuation.
BigInt representative(const PadicNumber& x) {
  if (x.is_zero()) return 0;
  if (x.valuation() < 0) throw Error(ErrorCode::OutOfDomain, "value is not a p-adic integer");
  return p_power(x.prime(), static_cast<int>(x.valuation())) * x.unit();
}

void check_q(const PadicNumber& q) {
  if (q.is_one()) return;
  const PadicNumber qm1 = q - one_like(q);
  if (!qm1.is_zero() && qm1.valuation() < 1)
    throw Error(ErrorCode::OutOfDomain, "q must satisfy valuation(q - 1) >= 1 (or q = 1)");
}

Index min_index(std::initializer_list<Index> xs) { return *std::min_element(xs.begin(), xs.end()); }

Index rational_valuation(long p, const Rational& x) {
  auto strip = [p](BigInt v) {
    Index k = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
      v /= p;
      ++k;
    }
    return k;
  };
  return strip(x.num()) - strip(x.den());
}

}  // namespace

std::string IntegralSpec::name() const {
  switch (integrand) {
    case Integrand::ConstantOne: return "1";
    case Integrand::Monomial: return "x^" + std::to_string(n);
    case Integrand::HalfPower: return "sqrt(1-4t)^x";
    case Integrand::HalfBinomial: return "binom(x/2," + std::to_string(n) + ")";
  }
  return "?";
}

PadicNumber q_integer_p_power(const PadicNumber& q, int N) {
  const BigInt pn = p_power(q.prime(), N);
  if (q.is_one()) return PadicNumber::from_integer(q.prime(), pn, q.digits());
  const PadicNumber one = one_like(q);
  return (q.pow(pn) - one) / (q - one);
}

PadicNumber padic_log_ratio(const PadicNumber& q) {
  if (q.is_one()) return one_like(q);
  check_q(q);
  return (q - one_like(q)) / padic_log(q);
}

PadicNumber riemann_sum(const IntegralSpec& spec, const PadicNumber& q, int N, const RiemannOptions& opts) {
  const long p = q.prime();
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "Riemann sum level N must be >= 1");
  const BigInt terms_big = p_power(p, N);
  if (terms_big > BigInt(static_cast<long>(opts.max_terms)))
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(p) + "^" + std::to_string(N) + " terms exceed the budget of " +
                    std::to_string(opts.max_terms));
  check_q(q);
  const bool volkenborn = q.is_one();
  const int d = q.digits();
  const std::int64_t terms = terms_big.get_si();

  std::optional<PadicNumber> s;
  if (spec.integrand == Integrand::HalfPower) {
    if (!spec.t) throw Error(ErrorCode::InvalidArgument, "half-power integrand needs t");
    if (spec.t->prime() != p) throw Error(ErrorCode::InvalidArgument, "t and q over different primes");
    s = padic_sqrt_1m4t(*spec.t);
  }
  if (spec.n < 0) throw Error(ErrorCode::InvalidArgument, "integrand index must be >= 0");

  const PadicNumber one = PadicNumber::from_integer(p, 1, d);
  auto value_at = [&](std::int64_t x) -> PadicNumber {
    switch (spec.integrand) {
      case Integrand::ConstantOne:
      case Integrand::HalfPower:
        return one;
      case Integrand::Monomial: {
        if (spec.n == 0) return one;
        BigInt xn;
        mpz_ui_pow_ui(xn.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(spec.n));
        return exact_value(p, Rational(xn), d);
      }
      case Integrand::HalfBinomial:
        return exact_value(p, binomial(Rational(BigInt(static_cast<long>(x)), BigInt(2)),
                                       static_cast<unsigned>(spec.n)),
                           d);
    }
    return one;
  };

  auto chunk_sum = [&](std::int64_t x0, std::int64_t x1) {
    PadicNumber weight = volkenborn ? one : q.pow(BigInt(static_cast<long>(x0)));
    if (s) weight = weight * s->pow(BigInt(static_cast<long>(x0)));
    const PadicNumber ratio = volkenborn ? (s ? *s : one) : (s ? q * *s : q);
    PadicNumber acc = PadicNumber::exact_zero(p);
    for (std::int64_t x = x0; x < x1; ++x) {
      acc = acc + value_at(x) * weight;
      weight = weight * ratio;
    }
    return acc;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(terms)));
  PadicNumber total = PadicNumber::exact_zero(p);
  if (threads == 1) {
    total = chunk_sum(0, terms);
  } else {
    std::vector<PadicNumber> partial(threads);
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    const std::int64_t step = (terms + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::int64_t x0 = std::min<std::int64_t>(terms, i * step);
      const std::int64_t x1 = std::min<std::int64_t>(terms, x0 + step);
      pool.emplace_back([&, i, x0, x1] {
        try {
          partial[i] = x0 < x1 ? chunk_sum(x0, x1) : PadicNumber::exact_zero(p);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
    for (const auto& part : partial) total = total + part;
  }
  return total / q_integer_p_power(q, N);
}

PadicNumber geometric_sum(const PadicNumber& s, const PadicNumber& q, int N) {
  check_q(q);
  const PadicNumber one = one_like(q);
  const PadicNumber r = s * q;
  const PadicNumber rm1 = r - one;
  if (rm1.is_zero()) throw Error(ErrorCode::DegenerateRatio, "s q = 1 to every known digit");
  const BigInt pn = p_power(q.prime(), N);
  if (q.is_one()) return (r.pow(pn) - one) / (PadicNumber::from_integer(q.prime(), pn, q.digits()) * rm1);
  return ((q - one) * (r.pow(pn) - one)) / ((q.pow(pn) - one) * rm1);
}

PadicNumber closed_form_eq12(const PadicNumber& q, const PadicNumber& t) {
  check_q(q);
  const long p = q.prime();
  const PadicNumber one = one_like(q);
  if (t.is_zero()) return one;
  if (t.valuation() < 1) throw Error(ErrorCode::OutOfDomain, "closed form needs valuation(t) >= 1");
  const int d = std::max(q.digits(), t.digits());
  const PadicNumber s = padic_sqrt_1m4t(t);
  const PadicNumber lg = padic_log(PadicNumber::from_integer(p, 1, d + static_cast<int>(t.valuation())) -
                                   PadicNumber::from_integer(p, 4, d) * t);
  const PadicNumber half_lg = PadicNumber::from_rational(p, Rational(1, 2), d) * lg;
  if (q.is_one()) return half_lg / (s - one);
  return ((q - one) + padic_log_ratio(q) * half_lg) / (q * s - one);
}

std::vector<ConvergenceRow> convergence_table(const IntegralSpec& spec, const PadicNumber& q, int N_max,
                                              const RiemannOptions& opts) {
  std::vector<ConvergenceRow> rows;
  for (int N = 1; N <= N_max; ++N) {
    ConvergenceRow row;
    row.N = N;
    row.value = riemann_sum(spec, q, N, opts);
    if (!rows.empty()) row.step = difference_valuation(row.value, rows.back().value);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool nondecreasing(const std::vector<DifferenceValuation>& vals) {
  for (std::size_t i = 1; i < vals.size(); ++i) {
    const auto& prev = vals[i - 1];
    const auto& cur = vals[i];
    // A fully cancelled entry only bounds its valuation from below, so it
    // cannot witness a decrease.
    if (!cur.bounded && cur.value < prev.value) return false;
  }
  return true;
}

PadicNumber specialize(const USeries& series, const Rational& u_value, long p, int digits) {
  return PadicNumber::from_rational(p, series.evaluate_at(u_value), digits);
}

MomentReport integral_crosscheck(const IntegralSpec& spec, const PadicNumber& q, int N, const USeries& expected,
                                 int K, const RiemannOptions& opts) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "integral cross-check needs N >= 2 to estimate convergence");
  if (K < 1 || K > expected.prec())
    throw Error(ErrorCode::InvalidArgument, "cross-check order K must lie in [1, " + std::to_string(expected.prec()) + "]");
  MomentReport r;
  r.riemann = riemann_sum(spec, q, N, opts);
  const PadicNumber previous = riemann_sum(spec, q, N - 1, opts);
  const DifferenceValuation step = difference_valuation(r.riemann, previous);
  r.convergence_order = step.value;

  const long p = q.prime();
  const Rational u = q.is_one() ? Rational(0) : Rational(representative(q) - 1);
  r.specialized = specialize(expected.truncated(q.is_one() ? 1 : K), u, p, q.digits());
  if (q.is_one()) {
    r.stated_tail = r.tail = kInfinite;
  } else {
    const Index v = (q - one_like(q)).valuation();
    r.stated_tail = static_cast<Index>(K) * v;
    // The known coefficients past K can carry powers of p in their
    // denominators; the smallest term among them estimates the tail.
    r.tail = r.stated_tail;
    for (int j = K; j < expected.prec(); ++j)
      if (!expected[j].is_zero())
        r.tail = std::min(r.tail, rational_valuation(p, expected[j]) + static_cast<Index>(j) * v);
  }
  const Index precision = std::min(r.riemann.absolute_precision(), r.specialized.absolute_precision());
  r.stated_modulus = min_index({r.stated_tail, precision, r.convergence_order});
  r.modulus = min_index({r.tail, precision, r.convergence_order});
  r.agreement = difference_valuation(r.riemann, r.specialized);
  r.pass = r.agreement.value >= r.modulus;
  r.detail = spec.name() + ": valuation(S_" + std::to_string(N) + " - series(u=q-1)) " +
             (r.agreement.bounded ? ">= " : "= ") + std::to_string(r.agreement.value) + ", required " +
             std::to_string(r.modulus);
  return r;
}

MomentReport moment_crosscheck(int n, const PadicNumber& q, int N, const USeries& bq, int K,
                               const RiemannOptions& opts) {
  return integral_crosscheck(IntegralSpec::monomial(n), q, N, bq, K, opts);
}

FunctionalEquationReport functional_equation_check(int n, const PadicNumber& q, int N, const RiemannOptions& opts) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "functional equation index must be >= 0");
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "functional equation check needs N >= 2");
  const long p = q.prime();
  const int d = q.digits();
  FunctionalEquationReport r;
  PadicNumber shifted = PadicNumber::exact_zero(p);
  PadicNumber plain = PadicNumber::exact_zero(p);
  Index convergence = kInfinite;
  for (int k = 0; k <= n; ++k) {
    const PadicNumber mk = riemann_sum(IntegralSpec::monomial(k), q, N, opts);
    const PadicNumber mk_prev = riemann_sum(IntegralSpec::monomial(k), q, N - 1, opts);
    convergence = std::min(convergence, difference_valuation(mk, mk_prev).value);
    shifted = shifted + PadicNumber::from_integer(p, binomial_int(n, k), d) * mk;
    if (k == n) plain = mk;
  }
  // f(x+1) = sum_k binom(n,k) x^k
  r.lhs = q * shifted - plain;
  const PadicNumber one = one_like(q);
  if (n == 0)
    r.rhs = q - one;
  else if (n == 1)
    r.rhs = padic_log_ratio(q);
  else
    r.rhs = PadicNumber::exact_zero(p);
  // n = 0 telescopes exactly, so no convergence term applies.
  r.modulus = min_index({r.lhs.absolute_precision(), r.rhs.absolute_precision(), n == 0 ? kInfinite : convergence});
  r.agreement = difference_valuation(r.lhs, r.rhs);
  r.pass = r.agreement.value >= r.modulus;
  r.detail = "f = x^" + std::to_string(n) + ": valuation(lhs - rhs) " + (r.agreement.bounded ? ">= " : "= ") +
             std::to_string(r.agreement.value) + ", required " + std::to_string(r.modulus);
  return r;
}

}  // namespace qcd
