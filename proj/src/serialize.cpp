#include "qcd/serialize.hpp"

#include "qcd/error.hpp"

namespace qcd {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const USeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return Json{{"prec", s.prec()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return Json{{"order", s.order()}, {"ring", "rational"}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"ring", "useries"}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const XPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"degree", p.degree()}, {"prec", p.prec()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const PadicNumber& x) {
  Json j{{"p", x.prime()}};
  if (x.is_exact_zero()) {
    j["val"] = nullptr;
    j["unit_base_p_digits"] = Json::array();
    j["digits"] = 0;
    j["zero"] = "exact";
    return j;
  }
  j["val"] = x.valuation();
  j["unit_base_p_digits"] = x.unit_digits();
  j["digits"] = x.digits();
  if (x.is_zero()) j["zero"] = "inexact";
  return j;
}

Json to_json(const DifferenceValuation& d) {
  return Json{{"valuation", d.value}, {"lower_bound_only", d.bounded}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "rational must be serialized as a string");
  return Rational::parse(j.get<std::string>());
}

USeries useries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("prec") || !j.contains("coeffs"))
    throw Error(ErrorCode::InvalidArgument, "u-series JSON needs \"prec\" and \"coeffs\"");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  if (static_cast<int>(coeffs.size()) != j.at("prec").get<int>())
    throw Error(ErrorCode::InvalidArgument, "u-series JSON: prec does not match the number of coefficients");
  return USeries(std::move(coeffs));
}

}  // namespace qcd
