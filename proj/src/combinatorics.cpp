#include "qcd/combinatorics.hpp"

#include <mutex>
#include <string>

#include "qcd/error.hpp"

namespace qcd {

StirlingTable StirlingTable::build(StirlingKind kind, int n_max) {
  if (n_max < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Stirling table size");
  StirlingTable t;
  t.kind_ = kind;
  t.rows_.reserve(static_cast<std::size_t>(n_max) + 1);
  t.rows_.push_back({BigInt(1)});
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = t.rows_.back();
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 2);
    for (int m = 0; m <= n + 1; ++m) {
      BigInt left = m >= 1 ? prev[m - 1] : BigInt(0);
      BigInt here = m <= n ? prev[m] : BigInt(0);
      // S1(n+1,m) = S1(n,m-1) - n S1(n,m);  S2(n+1,m) = m S2(n,m) + S2(n,m-1)
      if (kind == StirlingKind::FirstSigned)
        next[m] = left - BigInt(n) * here;
      else
        next[m] = left + BigInt(m) * here;
    }
    t.rows_.push_back(std::move(next));
  }
  return t;
}

const std::vector<BigInt>& StirlingTable::row(int n) const {
  if (n < 0 || n > n_max())
    throw Error(ErrorCode::IndexOutOfRange, "Stirling row " + std::to_string(n) + " outside table");
  return rows_[n];
}

const BigInt& StirlingTable::at(int n, int m) const {
  if (m < 0 || m > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "Stirling index (" + std::to_string(n) + "," + std::to_string(m) + ") needs 0 <= m <= n");
  return row(n)[m];
}

std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int n_max) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTable> cache[2];
  auto& slot = cache[kind == StirlingKind::FirstSigned ? 0 : 1];
  std::lock_guard lock(mu);
  if (!slot || slot->n_max() < n_max)
    slot = std::make_shared<const StirlingTable>(StirlingTable::build(kind, n_max));
  return slot;
}

BigInt stirling_first(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw Error(ErrorCode::IndexOutOfRange, "stirling_first needs 0 <= m <= n");
  return stirling_table(StirlingKind::FirstSigned, n)->at(n, m);
}

BigInt stirling_second(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw Error(ErrorCode::IndexOutOfRange, "stirling_second needs 0 <= m <= n");
  return stirling_table(StirlingKind::Second, n)->at(n, m);
}

std::vector<BigInt> falling_factorial_coeffs(int n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative falling factorial");
  std::vector<BigInt> p{BigInt(1)};
  for (int k = 0; k < n; ++k) {
    // p *= (x - k)
    std::vector<BigInt> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= BigInt(k) * p[i];
    }
    p = std::move(next);
  }
  return p;
}

Rational catalan(int m) {
  if (m < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Catalan index");
  return Rational(binomial_int(2 * m, m), BigInt(m + 1));
}

Rational classical_bernoulli(int n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Bernoulli index");
  std::vector<Rational> b{Rational(1)};
  for (int k = 1; k <= n; ++k) {
    // sum_{j<=k} binom(k+1, j) B_j = 0
    Rational acc;
    for (int j = 0; j < k; ++j) acc += Rational(binomial_int(k + 1, j)) * b[j];
    b.push_back(-acc / Rational(k + 1));
  }
  return b[n];
}

Rational classical_catalan_daehee(int n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Catalan-Daehee index");
  if (n == 0) return Rational(1);
  Rational d = pow(Rational(4), n) / Rational(n + 1);
  for (int m = 0; m < n; ++m) d -= pow(Rational(4), n - m - 1) / Rational(n - m) * catalan(m);
  return d;
}

}  // namespace qcd
