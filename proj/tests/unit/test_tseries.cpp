#include <doctest.h>

#include "generators.hpp"
#include "qcd/combinatorics.hpp"
#include "qcd/tseries.hpp"

using qcd::QSeries;
using qcd::Rational;
using qcd::RSeries;
using qcd::USeries;

namespace {

RSeries R(std::vector<Rational> c) { return RSeries(std::move(c)); }

RSeries t_series(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  if (order >= 1) c[1] = 1;
  return RSeries(std::move(c));
}

RSeries one_minus_4t(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  if (order >= 1) c[1] = -4;
  return RSeries(std::move(c));
}

}  // namespace

TEST_CASE("products of small series") {
  CHECK(R({1, 1, 0}) * R({1, -1, 0}) == R({1, 0, -1}));
  CHECK(t_series(3) * t_series(3) == R({0, 0, 1, 0}));
  // 2 * sum C_m t^{m+1}
  std::vector<Rational> cat{0};
  for (int m = 0; m < 4; ++m) cat.push_back(qcd::catalan(m));
  CHECK(Rational(2) * RSeries(cat) == R({0, 2, 2, 4, 10}));
}

TEST_CASE("product order is the minimum order") {
  CHECK((R({1, 2, 3}) * R({1, 1})).order() == 1);
}

TEST_CASE("composition") {
  const RSeries g = R({0, 3, -1, 2, 5});
  CHECK(qcd::compose(t_series(4), g) == g);
  CHECK(qcd::compose(R({1, 1, 0, 0}), R({0, 0, 1, 0})) == R({1, 0, 1, 0}));
  CHECK(gen::error_of([] { qcd::compose(R({1, 1}), R({1, 1})); }) == qcd::ErrorCode::NonzeroInnerConstant);
}

TEST_CASE("classical Catalan-Daehee numbers composed with (1 - e^{2t})/4 give t/(e^t - 1)") {
  const int order = 10;
  const RSeries f = qcd::classical_catalan_daehee_gf(order);
  const RSeries one = qcd::exp_series(order, Rational(0));
  const RSeries inner = Rational(-1, 4) * (qcd::exp_series(order, Rational(2)) - one);
  const RSeries h = qcd::compose(f, inner);
  for (int n = 0; n <= order; ++n) CHECK(h[n] * qcd::factorial(n) == qcd::classical_bernoulli(n));
  CHECK(h[1] == Rational(-1, 2));
  CHECK(h[2] == Rational(1, 12));
}

TEST_CASE("sqrt(1-4t) from Catalan numbers") {
  CHECK(qcd::sqrt_one_minus_4t(3) == R({1, -2, -2, -4}));
  CHECK(qcd::sqrt_one_minus_4t(5)[5] == Rational(-28));
  for (int order = 0; order <= 32; ++order) {
    const RSeries s = qcd::sqrt_one_minus_4t(order);
    CHECK(s * s == one_minus_4t(order));
  }
}

TEST_CASE("log(1-4t) and its exponential") {
  const RSeries lg = qcd::log_one_minus_4t(3);
  CHECK(lg == R({0, -4, -8, Rational(-64, 3)}));
  for (int order = 1; order <= 16; ++order) {
    const RSeries e = qcd::compose(qcd::exp_series(order, Rational(1)), qcd::log_one_minus_4t(order));
    CHECK(e == one_minus_4t(order));
  }
}

TEST_CASE("exponential series") {
  CHECK(qcd::exp_series(4, Rational(0)) == R({1, 0, 0, 0, 0}));
  CHECK(qcd::exp_series(3, Rational(2)) == R({1, 2, 2, Rational(4, 3)}));
  for (int i = 0; i < 20; ++i) {
    const Rational a = gen::rational();
    const RSeries prod = qcd::exp_series(8, a) * qcd::exp_series(8, -a);
    CHECK(prod == qcd::exp_series(8, Rational(0)));
  }
}

TEST_CASE("log(1+t) and the binomial series") {
  CHECK(qcd::log_one_plus_t(4) == R({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)}));
  CHECK(qcd::binomial_series(3, Rational(2)) == R({1, 2, 1, 0}));
  const RSeries half = qcd::binomial_series(12, Rational(1, 2));
  CHECK(half * half == R({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("binomial-series form of sqrt(1+t) matches the closed coefficients for m = 1..8") {
  const RSeries half = qcd::binomial_series(8, Rational(1, 2));
  for (int m = 1; m <= 8; ++m) {
    const Rational closed = pow(Rational(-1), m - 1) * Rational(qcd::binomial_int(2 * m, m)) *
                            pow(Rational(1, 4), m) / Rational(2 * m - 1);
    CHECK(half[m] == closed);
  }
}

TEST_CASE("inverse, power, and t-shifts") {
  const RSeries f = R({2, 1, 3, -1, 4});
  CHECK(f * qcd::inverse(f) == R({1, 0, 0, 0, 0}));
  CHECK(qcd::power(f, 3) == f * f * f);
  CHECK(qcd::power(f, 0) == R({1, 0, 0, 0, 0}));
  CHECK(qcd::divided_by_t(qcd::times_t(f)) == f);
  CHECK(gen::error_of([&] { qcd::divided_by_t(f); }) == qcd::ErrorCode::NotDivisible);
  CHECK(gen::error_of([] { qcd::inverse(R({0, 1})); }) == qcd::ErrorCode::NonUnit);
}

TEST_CASE("u-pivot solver: num = den gives 1") {
  const int prec = 8;
  const QSeries den(std::vector<USeries>{USeries::u(prec), USeries::one(prec), USeries::q(prec)});
  const QSeries x = qcd::gf_solve_u_pivot(den, den, 2);
  CHECK(x[0] == USeries::one(prec - 1));
  CHECK(x[1].is_zero());
  CHECK(x[2].is_zero());
}

TEST_CASE("u-pivot solver reproduces B_{1,q} from ((q-1) + L t)/(q e^t - 1)") {
  const int prec = 8, order = 3;
  const QSeries num(std::vector<USeries>{USeries::u(prec), qcd::log_ratio_constant(prec), USeries::zero(prec),
                                          USeries::zero(prec)});
  const QSeries den = USeries::q(prec) * qcd::lift(qcd::exp_series(order, Rational(1)), prec) -
                      qcd::lift(R({1, 0, 0, 0}), prec);
  const QSeries x = qcd::gf_solve_u_pivot(num, den, 3);
  CHECK(x[0] == USeries::one(prec - 1));
  const USeries b1 = x[1];
  CHECK(b1[0] == Rational(-1, 2));
  CHECK(b1[1] == Rational(-1, 12));
  CHECK(b1[2] == Rational(1, 24));
  CHECK(b1.prec() == prec - 2);
}

TEST_CASE("u-pivot solver refuses to under-deliver and rejects bad denominators") {
  const int prec = 4;
  const QSeries den(std::vector<USeries>{USeries::u(prec), USeries::one(prec), USeries::one(prec)});
  CHECK(gen::error_of([&] { qcd::gf_solve_u_pivot(den, den, 2); }) == qcd::ErrorCode::InsufficientPrecision);
  const QSeries unit_den(std::vector<USeries>{USeries::one(prec), USeries::one(prec)});
  CHECK(gen::error_of([&] { qcd::gf_solve_u_pivot(unit_den, unit_den, 1); }) ==
        qcd::ErrorCode::NonPivotDenominator);
  const QSeries u2_den(std::vector<USeries>{USeries::u(prec) * USeries::u(prec), USeries::one(prec)});
  CHECK(gen::error_of([&] { qcd::gf_solve_u_pivot(u2_den, u2_den, 1); }) == qcd::ErrorCode::NonPivotDenominator);
  const QSeries bad_num(std::vector<USeries>{USeries::one(prec), USeries::one(prec)});
  const QSeries ok_den(std::vector<USeries>{USeries::u(prec), USeries::one(prec)});
  CHECK(gen::error_of([&] { qcd::gf_solve_u_pivot(bad_num, ok_den, 1); }) == qcd::ErrorCode::NotDivisible);
}

TEST_CASE("solver output always satisfies den * X = num") {
  for (int trial = 0; trial < 20; ++trial) {
    const int prec = 10, order = 4;
    std::vector<USeries> dc, xc;
    dc.push_back(gen::unit_series(prec).times_u().truncated(prec));
    for (int k = 1; k <= order; ++k) dc.push_back(gen::series(prec));
    for (int k = 0; k <= order; ++k) xc.push_back(gen::series(prec));
    const QSeries den(dc), x(xc);
    const QSeries num = den * x;
    const QSeries solved = qcd::gf_solve_u_pivot(num, den, prec - order - 1);
    for (int n = 0; n <= order; ++n) CHECK(qcd::agree(solved[n], x[n]));
  }
}
