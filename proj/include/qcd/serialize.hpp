#pragma once

#include <json.hpp>

#include "qcd/padic.hpp"
#include "qcd/rational.hpp"
#include "qcd/tseries.hpp"
#include "qcd/useries.hpp"
#include "qcd/xpoly.hpp"

namespace qcd {

using Json = nlohmann::ordered_json;

/// "-7/3" string.
Json to_json(const Rational& r);
/// {"prec": K, "coeffs": ["1", "-1/2", ...]}
Json to_json(const USeries& s);
/// {"order": N, "ring": "rational"|"useries", "coeffs": [...]}
Json to_json(const RSeries& s);
Json to_json(const QSeries& s);
/// {"degree": d, "prec": K, "coeffs": [<USeries>, ...]} indexed by x-power.
Json to_json(const XPoly& p);
/// {"p": 5, "val": v, "unit_base_p_digits": [d0, d1, ...], "digits": M};
/// zeros add "zero": "exact" | "inexact" with val the known p-power.
Json to_json(const PadicNumber& x);
Json to_json(const DifferenceValuation& d);

Rational rational_from_json(const Json& j);
USeries useries_from_json(const Json& j);

}  // namespace qcd
