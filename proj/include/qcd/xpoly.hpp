#pragma once

#include <vector>

#include "qcd/useries.hpp"

namespace qcd {

/// Polynomial in a formal variable x with Q[[u]] coefficients.
/// Trailing identically-zero coefficients are trimmed (degree 0 keeps one).
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<USeries> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^l; a zero series past the degree.
  USeries coeff(int l) const;
  const std::vector<USeries>& coeffs() const { return coeffs_; }
  int prec() const;

  XPoly truncated(int prec) const;

  /// Substitutes a rational value for x.
  USeries evaluate(const Rational& x) const;
  USeries at_zero() const { return coeff(0); }

  friend bool operator==(const XPoly& a, const XPoly& b) = default;

 private:
  std::vector<USeries> coeffs_;
};

/// Coefficientwise agreement at the common u-precision.
bool agree(const XPoly& a, const XPoly& b);

}  // namespace qcd
