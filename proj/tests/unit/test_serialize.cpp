#include <doctest.h>

#include "generators.hpp"
#include "qcd/serialize.hpp"

using qcd::Json;
using qcd::PadicNumber;
using qcd::Rational;
using qcd::USeries;

TEST_CASE("rationals serialize as reduced strings") {
  CHECK(qcd::to_json(Rational(-14, 6)) == Json("-7/3"));
  CHECK(qcd::to_json(Rational(4)) == Json("4"));
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen::rational(1000);
    CHECK(qcd::rational_from_json(qcd::to_json(r)) == r);
  }
  CHECK(gen::error_of([] { qcd::rational_from_json(Json(3)); }) == qcd::ErrorCode::InvalidArgument);
}

TEST_CASE("u-series round trip") {
  for (int i = 0; i < 50; ++i) {
    const USeries s = gen::series(static_cast<int>(gen::integer(1, 12)));
    const Json j = qcd::to_json(s);
    CHECK(j["prec"] == s.prec());
    CHECK(qcd::useries_from_json(j) == s);
  }
  Json bad = qcd::to_json(gen::series(3));
  bad["prec"] = 4;
  CHECK(gen::error_of([&] { qcd::useries_from_json(bad); }) == qcd::ErrorCode::InvalidArgument);
  CHECK(gen::error_of([] { qcd::useries_from_json(Json::object()); }) == qcd::ErrorCode::InvalidArgument);
}

TEST_CASE("p-adic schema") {
  const Json j = qcd::to_json(PadicNumber::from_integer(5, qcd::BigInt(-50), 4));
  CHECK(j["p"] == 5);
  CHECK(j["val"] == 2);
  CHECK(j["digits"] == 4);
  CHECK(j["unit_base_p_digits"] == Json::parse("[3,4,4,4]"));
  CHECK_FALSE(j.contains("zero"));

  const Json z = qcd::to_json(PadicNumber::exact_zero(7));
  CHECK(z["val"].is_null());
  CHECK(z["digits"] == 0);
  CHECK(z["unit_base_p_digits"].empty());
  CHECK(z["zero"] == "exact");

  const Json m = qcd::to_json(PadicNumber::zero_mod(3, 9));
  CHECK(m["val"] == 9);
  CHECK(m["zero"] == "inexact");
}
