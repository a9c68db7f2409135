#include <doctest.h>

#include "generators.hpp"
#include "qcd/padic_lab.hpp"
#include "qcd/q_families.hpp"

using qcd::BigInt;
using qcd::IntegralSpec;
using qcd::PadicNumber;
using qcd::Rational;
using qcd::RiemannOptions;

namespace {

constexpr int kDigits = 20;

PadicNumber P(long v, int digits = kDigits, long p = 5) { return PadicNumber::from_integer(p, BigInt(v), digits); }

const qcd::QFamilies& families() {
  static const qcd::QFamilies f(qcd::QFamilyConfig::with_default_guard(6, 10));
  return f;
}

}  // namespace

TEST_CASE("[p^N]_q") {
  CHECK(qcd::q_integer_p_power(P(1), 2) == P(25));
  CHECK(qcd::agrees(qcd::q_integer_p_power(P(6), 1), P(1 + 6 + 36 + 216 + 1296)));
}

TEST_CASE("the constant-one integral is exactly 1 at every level") {
  for (long c : {0L, 1L, 2L, -1L}) {
    const PadicNumber q = P(1 + 5 * c);
    for (int N = 1; N <= 5; ++N) {
      const PadicNumber v = qcd::riemann_sum(IntegralSpec::constant_one(), q, N);
      CHECK(v.is_one());
      // q^{p^N} - 1 has valuation N + 1 (N at q = 1), and those digits are lost.
      CHECK(v.digits() == kDigits - N - (c == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("s = 1 integrates to 1") {
  const PadicNumber t0 = PadicNumber::zero_mod(5, kDigits);
  for (int N = 1; N <= 4; ++N) CHECK(qcd::riemann_sum(IntegralSpec::half_power(t0), P(6), N).is_one());
  CHECK(qcd::closed_form_eq12(P(6), t0).is_one());
  CHECK(qcd::closed_form_eq12(P(1), t0).is_one());
}

TEST_CASE("Cauchy step for x at p = 5, q = 6") {
  const PadicNumber s5 = qcd::riemann_sum(IntegralSpec::monomial(1), P(6), 5);
  const PadicNumber s6 = qcd::riemann_sum(IntegralSpec::monomial(1), P(6), 6);
  CHECK(qcd::difference_valuation(s6, s5).value >= 5);
}

TEST_CASE("geometric closed form equals the direct sum bit for bit") {
  const PadicNumber t = P(5);
  const PadicNumber s = qcd::padic_sqrt_1m4t(t);
  for (long c : {1L, 3L, 5L}) {
    const PadicNumber q = P(1 + 5 * c);
    for (int N = 1; N <= 6; ++N) CHECK(qcd::geometric_sum(s, q, N) == qcd::riemann_sum(IntegralSpec::half_power(t), q, N));
  }
}

TEST_CASE("geometric closed form keeps fewer digits when s q - 1 has higher valuation") {
  const PadicNumber t = P(5);
  const PadicNumber s = qcd::padic_sqrt_1m4t(t);
  for (long c : {2L, -3L}) {
    const PadicNumber q = P(1 + 5 * c);
    REQUIRE((s * q - P(1)).valuation() == 2);
    for (int N = 1; N <= 4; ++N) {
      const PadicNumber g = qcd::geometric_sum(s, q, N);
      const PadicNumber r = qcd::riemann_sum(IntegralSpec::half_power(t), q, N);
      CHECK(g.digits() == r.digits() - 1);
      CHECK(qcd::agrees(g, r));
    }
  }
  CHECK(qcd::geometric_sum(P(1), P(6), 3).is_one());
  CHECK(gen::error_of([] { qcd::geometric_sum(P(1), P(1), 2); }) == qcd::ErrorCode::DegenerateRatio);
}

TEST_CASE("threaded Riemann sums are bit-identical to sequential ones") {
  const PadicNumber q = P(6);
  const std::vector<IntegralSpec> specs{IntegralSpec::constant_one(), IntegralSpec::monomial(3),
                                        IntegralSpec::half_power(P(25)), IntegralSpec::half_binomial(2)};
  for (const auto& spec : specs) {
    const PadicNumber seq = qcd::riemann_sum(spec, q, 5);
    for (unsigned threads : {2u, 3u, 7u}) {
      RiemannOptions opts;
      opts.threads = threads;
      CHECK(qcd::riemann_sum(spec, q, 5, opts) == seq);
    }
  }
}

TEST_CASE("term budget") {
  RiemannOptions opts;
  opts.max_terms = 100;
  CHECK(gen::error_of([&] { qcd::riemann_sum(IntegralSpec::monomial(1), P(6), 3, opts); }) ==
        qcd::ErrorCode::BudgetExceeded);
  CHECK_NOTHROW(qcd::riemann_sum(IntegralSpec::monomial(1), P(6), 2, opts));
}

TEST_CASE("domain checks") {
  CHECK(gen::error_of([] { qcd::riemann_sum(IntegralSpec::monomial(1), P(2), 2); }) == qcd::ErrorCode::OutOfDomain);
  CHECK(gen::error_of([] { qcd::closed_form_eq12(P(6), P(2)); }) == qcd::ErrorCode::OutOfDomain);
}

TEST_CASE("Riemann sums converge to the closed form with nondecreasing valuation") {
  for (long c : {1L, 0L, 2L}) {
    const PadicNumber q = P(1 + 5 * c);
    const PadicNumber t = P(5);
    const PadicNumber closed = qcd::closed_form_eq12(q, t);
    std::vector<qcd::DifferenceValuation> deficits;
    for (const auto& row : qcd::convergence_table(IntegralSpec::half_power(t), q, 6))
      deficits.push_back(qcd::difference_valuation(row.value, closed));
    CHECK(qcd::nondecreasing(deficits));
    CHECK(deficits.back().value > deficits.front().value);
  }
}

TEST_CASE("Cauchy steps are nondecreasing for every integrand") {
  const PadicNumber q = P(6);
  const std::vector<IntegralSpec> specs{IntegralSpec::constant_one(), IntegralSpec::monomial(0),
                                        IntegralSpec::monomial(1),    IntegralSpec::monomial(4),
                                        IntegralSpec::half_power(P(5)), IntegralSpec::half_binomial(3)};
  for (const auto& spec : specs) {
    INFO(spec.name());
    const auto rows = qcd::convergence_table(spec, q, 6);
    REQUIRE(rows.size() == 6);
    CHECK_FALSE(rows.front().step.has_value());
    std::vector<qcd::DifferenceValuation> steps;
    for (const auto& r : rows)
      if (r.step) steps.push_back(*r.step);
    CHECK(qcd::nondecreasing(steps));
  }
}

TEST_CASE("nondecreasing treats cancelled entries as lower bounds") {
  using D = qcd::DifferenceValuation;
  CHECK(qcd::nondecreasing({D{2, false}, D{3, false}, D{3, false}}));
  CHECK_FALSE(qcd::nondecreasing({D{3, false}, D{2, false}}));
  CHECK(qcd::nondecreasing({D{5, true}, D{4, true}}));
  CHECK_FALSE(qcd::nondecreasing({D{5, true}, D{4, false}}));
}

TEST_CASE("moments match the q-Bernoulli series at p = 5, q = 6") {
  const PadicNumber q = P(6);
  for (int n = 0; n <= 6; ++n) {
    const auto r = qcd::moment_crosscheck(n, q, 6, families().q_bernoulli_working(n), 10);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.modulus == r.stated_modulus);
    CHECK(r.modulus >= 5);
  }
  const auto r0 = qcd::moment_crosscheck(0, q, 6, families().q_bernoulli_working(0), 10);
  CHECK(r0.riemann.is_one());
  CHECK(r0.specialized.is_one());
}

TEST_CASE("moment tail accounts for p in the coefficient denominators") {
  const PadicNumber q = P(-2, kDigits, 3);
  const auto r = qcd::moment_crosscheck(1, q, 8, families().q_bernoulli_working(1), 10);
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(r.tail < r.stated_tail);
  CHECK(r.agreement.value < r.stated_modulus);
}

TEST_CASE("Volkenborn moments give the classical Bernoulli numbers") {
  const PadicNumber q = P(1);
  for (int n = 0; n <= 4; ++n) {
    const auto r = qcd::moment_crosscheck(n, q, 6, families().q_bernoulli_working(n), 10);
    INFO(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("half-binomial integrals match (-1)^n 4^{-n} d_{n,q}") {
  const PadicNumber q = P(6);
  for (int n = 0; n <= 4; ++n) {
    const Rational scale = pow(Rational(-1, 4), n);
    const auto r = qcd::integral_crosscheck(IntegralSpec::half_binomial(n), q, 6,
                                            scale * families().qcd_direct_working(n), 10);
    INFO(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("cross-check arguments") {
  CHECK_THROWS_AS(qcd::moment_crosscheck(1, P(6), 1, families().q_bernoulli_working(1), 10), qcd::Error);
  CHECK_THROWS_AS(qcd::moment_crosscheck(1, P(6), 3, families().q_bernoulli(1), 11), qcd::Error);
}

TEST_CASE("functional equation") {
  const PadicNumber q = P(6);
  const auto r0 = qcd::functional_equation_check(0, q, 4);
  CHECK(r0.pass);
  CHECK(qcd::agrees(r0.lhs, q - P(1)));
  CHECK(r0.agreement.bounded);
  for (int n = 1; n <= 5; ++n) {
    const auto r = qcd::functional_equation_check(n, q, 6);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.modulus >= 5);
  }
  const auto r1 = qcd::functional_equation_check(1, q, 6);
  CHECK(qcd::agrees(r1.rhs, qcd::padic_log_ratio(q)));
}

TEST_CASE("specialization of a u-series") {
  const qcd::USeries s(std::vector<Rational>{1, 2, 3});
  CHECK(qcd::specialize(s, Rational(5), 5, 6) == PadicNumber::from_integer(5, BigInt(1 + 10 + 75), 6));
}
