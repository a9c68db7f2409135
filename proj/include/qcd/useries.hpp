#pragma once

#include <span>
#include <vector>

#include "qcd/rational.hpp"

namespace qcd {

/// Truncated power series in u = q - 1 over the rationals: an element of
/// Q[[u]] known modulo u^prec. Every "function of q" lives here, including
/// (q-1)/log q. prec() is the number of known u-orders and is never
/// overstated by any operation.
class USeries {
 public:
  USeries() = default;
  explicit USeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static USeries constant(const Rational& c, int prec);
  static USeries zero(int prec) { return constant(Rational(0), prec); }
  static USeries one(int prec) { return constant(Rational(1), prec); }
  /// u itself.
  static USeries u(int prec);
  /// q = 1 + u.
  static USeries q(int prec);

  int prec() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// All known coefficients vanish.
  bool is_zero() const;

  /// Throws InsufficientPrecision when prec > this->prec().
  USeries truncated(int prec) const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const Rational& s, const USeries& a);
  friend USeries operator*(const USeries& a, const Rational& s) { return s * a; }
  USeries& operator+=(const USeries& o) { return *this = *this + o; }
  USeries& operator-=(const USeries& o) { return *this = *this - o; }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; NonUnit when the constant term is zero.
  USeries inverse() const;

  /// Exact division by u. NotDivisible unless the u^0 coefficient is 0;
  /// the result knows one order fewer.
  USeries divided_by_u() const;

  /// Multiplication by u; the result knows one order more.
  USeries times_u() const;

  /// q -> 1 limit, i.e. the u^0 coefficient. InsufficientPrecision at prec 0.
  Rational classical_limit() const;

  /// Sum of the known terms at a rational value of u.
  Rational evaluate_at(const Rational& u_value) const;

  /// Structural equality: same prec and same coefficients.
  friend bool operator==(const USeries& a, const USeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Equality of the first min(a.prec(), b.prec()) coefficients.
bool agree(const USeries& a, const USeries& b);

/// (q-1)/log q = u/log(1+u) to the given precision (prec >= 1).
USeries log_ratio_constant(int prec);

}  // namespace qcd
