#include <doctest.h>

#include "qcd/combinatorics.hpp"
#include "qcd/tseries.hpp"

using qcd::BigInt;
using qcd::Rational;

TEST_CASE("Catalan numbers") {
  CHECK(qcd::catalan(0) == Rational(1));
  CHECK(qcd::catalan(3) == Rational(5));
  CHECK(qcd::catalan(5) == Rational(42));
}

TEST_CASE("Stirling numbers of the first kind are signed") {
  CHECK(qcd::stirling_first(0, 0) == 1);
  CHECK(qcd::stirling_first(3, 2) == -3);
  CHECK(qcd::stirling_first(4, 2) == 11);
  CHECK(qcd::stirling_first(5, 0) == 0);
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(qcd::stirling_second(0, 0) == 1);
  CHECK(qcd::stirling_second(3, 2) == 3);
  CHECK(qcd::stirling_second(4, 2) == 7);
}

TEST_CASE("out-of-range Stirling indices") {
  CHECK_THROWS_AS(qcd::stirling_first(2, 3), qcd::Error);
  CHECK_THROWS_AS(qcd::stirling_second(-1, 0), qcd::Error);
  const auto t = qcd::StirlingTable::build(qcd::StirlingKind::Second, 4);
  CHECK_THROWS_AS(t.at(5, 1), qcd::Error);
}

TEST_CASE("falling factorial coefficients") {
  CHECK(qcd::falling_factorial_coeffs(0) == std::vector<BigInt>{1});
  CHECK(qcd::falling_factorial_coeffs(2) == std::vector<BigInt>{0, -1, 1});
  CHECK(qcd::falling_factorial_coeffs(4) == std::vector<BigInt>{0, -6, 11, -6, 1});
}

TEST_CASE("first-kind recurrence matches the falling-factorial expansion for n <= 20") {
  for (int n = 0; n <= 20; ++n) {
    const auto ff = qcd::falling_factorial_coeffs(n);
    for (int m = 0; m <= n; ++m) CHECK(ff[m] == qcd::stirling_first(n, m));
  }
}

TEST_CASE("second-kind recurrence matches x^n = sum S_2(n,m) (x)_m for n <= 20") {
  for (int n = 0; n <= 20; ++n) {
    std::vector<BigInt> sum(n + 1, 0);
    for (int m = 0; m <= n; ++m) {
      const auto ff = qcd::falling_factorial_coeffs(m);
      for (int k = 0; k <= m; ++k) sum[k] += qcd::stirling_second(n, m) * ff[k];
    }
    for (int k = 0; k <= n; ++k) CHECK(sum[k] == (k == n ? 1 : 0));
  }
}

TEST_CASE("inverse pair: sum_m S_1(n,m) S_2(m,k) = delta(n,k) for n, k <= 16") {
  for (int n = 0; n <= 16; ++n)
    for (int k = 0; k <= 16; ++k) {
      BigInt s = 0;
      for (int m = std::min(n, k); m <= std::max(n, k); ++m)
        if (m <= n && k <= m) s += qcd::stirling_first(n, m) * qcd::stirling_second(m, k);
      CHECK(s == (n == k ? 1 : 0));
    }
}

TEST_CASE("shared tables grow on demand") {
  const auto small = qcd::stirling_table(qcd::StirlingKind::FirstSigned, 3);
  CHECK(small->n_max() >= 3);
  const auto big = qcd::stirling_table(qcd::StirlingKind::FirstSigned, 30);
  CHECK(big->n_max() >= 30);
  CHECK(big->at(3, 2) == -3);
}

TEST_CASE("classical Bernoulli numbers") {
  CHECK(qcd::classical_bernoulli(0) == Rational(1));
  CHECK(qcd::classical_bernoulli(1) == Rational(-1, 2));
  CHECK(qcd::classical_bernoulli(2) == Rational(1, 6));
  CHECK(qcd::classical_bernoulli(3) == Rational(0));
  CHECK(qcd::classical_bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("classical Catalan-Daehee numbers") {
  CHECK(qcd::classical_catalan_daehee(0) == Rational(1));
  CHECK(qcd::classical_catalan_daehee(1) == Rational(1));
  CHECK(qcd::classical_catalan_daehee(2) == Rational(7, 3));
}

TEST_CASE("explicit Catalan-Daehee sum matches its generating function for n <= 16") {
  const auto gf = qcd::classical_catalan_daehee_gf(16);
  for (int n = 0; n <= 16; ++n) CHECK(qcd::classical_catalan_daehee(n) == gf[n]);
}

TEST_CASE("classical limit of the Stirling expansion: d_n from Bernoulli numbers for n <= 16") {
  for (int n = 0; n <= 16; ++n) {
    Rational s = 0;
    for (int m = 0; m <= n; ++m)
      s += pow(Rational(2), 2 * n - m) * qcd::classical_bernoulli(m) * Rational(qcd::stirling_first(n, m));
    s /= qcd::factorial(n);
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(sign * s == qcd::classical_catalan_daehee(n));
  }
}
