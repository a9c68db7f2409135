#pragma once

#include <cstdint>
#include <vector>

#include "qcd/rational.hpp"

namespace qcd {

/// Element of Q_p (p an odd prime) stored as p^valuation * unit, where the
/// unit is known modulo p^digits.
///
/// Zeros come in two flavours: an exact zero, and a zero that is only known
/// modulo p^k (k kept in valuation(), digits() == 0). The latter is what a
/// complete cancellation produces; nothing about it is invented.
class PadicNumber {
 public:
  using Index = std::int64_t;

  /// Exact zero for p = 3.
  PadicNumber() = default;

  static PadicNumber from_integer(long p, const BigInt& value, int digits);
  static PadicNumber from_rational(long p, const Rational& value, int digits);
  static PadicNumber exact_zero(long p);
  /// A value known only to be 0 mod p^absolute_precision.
  static PadicNumber zero_mod(long p, Index absolute_precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && exact_; }
  /// For a nonzero value the p-adic valuation; for an inexact zero the power
  /// of p it is known to be divisible by.
  Index valuation() const { return val_; }
  const BigInt& unit() const { return unit_; }
  int digits() const { return digits_; }
  /// valuation + digits; an exact zero reports the largest Index.
  Index absolute_precision() const;

  /// Base-p digits of the unit, least significant first.
  std::vector<int> unit_digits() const;

  /// The unit equals 1 to every known digit and the valuation is 0.
  bool is_one() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  /// DivisionByZero for an exact zero divisor, PrecisionExhausted for an
  /// inexact one.
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  PadicNumber pow(const BigInt& exponent) const;

  /// Identical representation (prime, valuation, unit, digits, zero kind).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);

 private:
  long p_ = 3;
  bool zero_ = true;
  bool exact_ = true;
  Index val_ = 0;
  BigInt unit_ = 0;
  int digits_ = 0;
};

/// Checks p is an odd prime: OutOfDomain for p = 2, InvalidArgument otherwise.
void require_odd_prime(long p);

/// p-adic valuation of a - b. `bounded` is set when the difference vanishes
/// to every tracked digit, in which case `value` is only a lower bound.
struct DifferenceValuation {
  PadicNumber::Index value = 0;
  bool bounded = false;
};
DifferenceValuation difference_valuation(const PadicNumber& a, const PadicNumber& b);

/// a and b coincide on their common absolute precision.
bool agrees(const PadicNumber& a, const PadicNumber& b);

/// log x = sum (-1)^{k+1} (x-1)^k / k; OutOfDomain unless valuation(x-1) >= 1.
PadicNumber padic_log(const PadicNumber& x);

/// exp x = sum x^k / k!; OutOfDomain unless valuation(x) >= 1.
PadicNumber padic_exp(const PadicNumber& x);

/// sqrt(1 - 4t) by the binomial series, the root congruent to 1 mod p.
/// OutOfDomain unless valuation(t) >= 1.
PadicNumber padic_sqrt_1m4t(const PadicNumber& t);

}  // namespace qcd
