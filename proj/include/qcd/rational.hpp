#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcd {

using BigInt = mpz_class;

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "n" or "n/d" with an optional leading '-'.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "-7/3"; the denominator is omitted when it is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

/// n! as an integer-valued rational.
Rational factorial(unsigned n);

/// Generalized binomial coefficient binom(a, k) for rational a.
Rational binomial(const Rational& a, unsigned k);

BigInt binomial_int(unsigned n, unsigned k);

}  // namespace qcd
