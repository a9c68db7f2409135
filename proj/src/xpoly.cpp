#include "qcd/xpoly.hpp"

#include <algorithm>
#include <limits>

#include "qcd/error.hpp"

namespace qcd {

XPoly::XPoly(std::vector<USeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "x-polynomial needs a constant term");
  const int p = prec();
  for (auto& c : coeffs_) c = c.truncated(p);
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int XPoly::prec() const {
  int p = std::numeric_limits<int>::max();
  for (const auto& c : coeffs_) p = std::min(p, c.prec());
  return coeffs_.empty() ? 0 : p;
}

USeries XPoly::coeff(int l) const {
  if (l < 0) throw Error(ErrorCode::IndexOutOfRange, "negative x-power");
  if (l > degree()) return USeries::zero(prec());
  return coeffs_[l];
}

XPoly XPoly::truncated(int prec) const {
  std::vector<USeries> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.truncated(prec));
  return XPoly(std::move(v));
}

USeries XPoly::evaluate(const Rational& x) const {
  USeries acc = USeries::zero(prec());
  for (int l = degree(); l >= 0; --l) acc = x * acc + coeffs_[l];
  return acc;
}

bool agree(const XPoly& a, const XPoly& b) {
  const int d = std::max(a.degree(), b.degree());
  for (int l = 0; l <= d; ++l)
    if (!agree(a.coeff(l), b.coeff(l))) return false;
  return true;
}

}  // namespace qcd
