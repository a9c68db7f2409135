#include <doctest.h>

#include "generators.hpp"
#include "qcd/error.hpp"
#include "qcd/useries.hpp"

using qcd::Rational;
using qcd::USeries;

namespace {

USeries S(std::vector<Rational> c) { return USeries(std::move(c)); }

}  // namespace

TEST_CASE("difference of squares") {
  const USeries one_plus = S({1, 1, 0});
  const USeries one_minus = S({1, -1, 0});
  CHECK(one_plus * one_minus == S({1, 0, -1}));
}

TEST_CASE("additive and multiplicative inverses") {
  const USeries a = S({2, 1, 0, 0});
  CHECK((a + (-a)).is_zero());
  CHECK(a * a.inverse() == USeries::one(4));
  CHECK(a.inverse() == S({Rational(1, 2), Rational(-1, 4), Rational(1, 8), Rational(-1, 16)}));
  CHECK(USeries::one(5).inverse() == USeries::one(5));
}

TEST_CASE("non-units and non-divisible series are rejected") {
  CHECK(gen::error_of([] { S({0, 1, 1}).inverse(); }) == qcd::ErrorCode::NonUnit);
  CHECK(gen::error_of([] { S({1, 1}).divided_by_u(); }) == qcd::ErrorCode::NotDivisible);
}

TEST_CASE("division by u drops one order") {
  const USeries r = S({0, 1, 1}).divided_by_u();
  CHECK(r.prec() == 2);
  CHECK(r == S({1, 1}));
}

TEST_CASE("precision is the minimum over operands") {
  const USeries a = gen::series(5), b = gen::series(3);
  CHECK((a + b).prec() == 3);
  CHECK((a * b).prec() == 3);
  CHECK((a - b).prec() == 3);
  CHECK(a.times_u().prec() == 6);
  CHECK_THROWS_AS(b.truncated(4), qcd::Error);
}

TEST_CASE("ring axioms hold on random samples") {
  for (int i = 0; i < 60; ++i) {
    const int prec = static_cast<int>(gen::integer(1, 9));
    const USeries a = gen::series(prec), b = gen::series(prec), c = gen::series(prec);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("double inversion and u-division round trip") {
  for (int i = 0; i < 60; ++i) {
    const int prec = static_cast<int>(gen::integer(1, 10));
    const USeries a = gen::unit_series(prec);
    CHECK(a.inverse().inverse() == a);
    const USeries b = gen::series(prec);
    const USeries back = b.times_u().divided_by_u();
    CHECK(back.prec() == prec);
    CHECK(back == b);
    CHECK((USeries::u(prec + 1) * b.times_u().truncated(prec + 1)).prec() == prec + 1);
  }
}

TEST_CASE("the log-ratio constant L = u / log(1+u)") {
  const USeries L = qcd::log_ratio_constant(6);
  CHECK(L == S({1, Rational(1, 2), Rational(-1, 12), Rational(1, 24), Rational(-19, 720), Rational(3, 160)}));
  CHECK(L.classical_limit() == Rational(1));
  // log(1+u)/u = sum (-1)^k u^k/(k+1)
  std::vector<Rational> lg;
  for (int k = 0; k < 6; ++k) lg.push_back(Rational(k % 2 == 0 ? 1 : -1, k + 1));
  CHECK(L * S(lg) == USeries::one(6));
}

TEST_CASE("q-Bernoulli B_1 by hand: (L - q)/u") {
  const USeries L = qcd::log_ratio_constant(6);
  const USeries b1 = (L - USeries::q(6)).divided_by_u();
  CHECK(b1.prec() == 5);
  CHECK(b1 == S({Rational(-1, 2), Rational(-1, 12), Rational(1, 24), Rational(-19, 720), Rational(3, 160)}));
  CHECK(b1.classical_limit() == Rational(-1, 2));
}

TEST_CASE("classical limit and evaluation") {
  CHECK(S({2, 1}).classical_limit() == Rational(2));
  CHECK(S({1, 2, 3}).evaluate_at(Rational(1, 2)) == Rational(1) + Rational(1) + Rational(3, 4));
  CHECK(USeries::q(3) == S({1, 1, 0}));
}

TEST_CASE("agree compares the common precision") {
  CHECK(qcd::agree(S({1, 2, 3}), S({1, 2})));
  CHECK_FALSE(qcd::agree(S({1, 2, 3}), S({1, 3})));
}
