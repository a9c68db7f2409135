#pragma once

#include <memory>
#include <vector>

#include "qcd/rational.hpp"

namespace qcd {

enum class StirlingKind { FirstSigned, Second };

/// Triangle (n, m) -> S(n, m), 0 <= m <= n <= n_max.
///
/// First kind is signed: (x)_n = sum_m S_1(n, m) x^m.
/// Second kind: x^n = sum_m S_2(n, m) (x)_m.
class StirlingTable {
 public:
  static StirlingTable build(StirlingKind kind, int n_max);

  StirlingKind kind() const { return kind_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  /// IndexOutOfRange unless 0 <= m <= n <= n_max.
  const BigInt& at(int n, int m) const;
  const std::vector<BigInt>& row(int n) const;

 private:
  StirlingKind kind_ = StirlingKind::FirstSigned;
  std::vector<std::vector<BigInt>> rows_;
};

/// Shared table covering at least n_max; rebuilt whole when a larger one is needed.
std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int n_max);

BigInt stirling_first(int n, int m);
BigInt stirling_second(int n, int m);

/// Coefficients of (x)_n = x(x-1)...(x-n+1), lowest power first.
std::vector<BigInt> falling_factorial_coeffs(int n);

/// C_m = binom(2m, m)/(m+1).
Rational catalan(int m);

/// B_n with B_1 = -1/2 (the t/(e^t - 1) family).
Rational classical_bernoulli(int n);

/// Catalan-Daehee number d_n from the explicit Catalan-number sum.
Rational classical_catalan_daehee(int n);

}  // namespace qcd
