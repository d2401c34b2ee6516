#include "test_support.hpp"

#include "gdpf/io.hpp"
#include "gdpf/parser.hpp"

using namespace gdpf;
using io::Json;

namespace {

PolyQ cq(const std::string& t) { return parse_constant_poly<Rational>(t, ParseContext::standard()); }

}  // namespace

TEST_CASE("certificate JSON round trip") {
  const PolyQ F = cq("X^4 + Y^4 + Z^4 + X*Y*Z^2");
  const auto m = graded_membership(cq("X^4*Y^2*Z + 7*Z^7"), F);
  REQUIRE(m.member);
  const Json j = io::to_json(*m.certificate);
  CHECK(j.contains("target"));
  CHECK(j["cofactors"].size() == 3);
  const auto back = io::certificate_from_json(j);
  CHECK(back.target == m.certificate->target);
  CHECK(back.curve == F);
  CHECK(back.verify());

  Json bad = j;
  bad["cofactors"][0] = "0";
  CHECK_THROWS_AS(io::certificate_from_json(bad), io::CertificateRejected);
  Json short_ = j;
  short_["cofactors"].erase(2);
  CHECK_THROWS_AS(io::certificate_from_json(short_), io::CertificateRejected);
  CHECK_THROWS(io::certificate_from_json(Json{{"target", "X"}}));
}

TEST_CASE("Picard-Fuchs JSON round trip") {
  const PolyQs F = parse_poly<Rational>("X^3 + Y^3 + Z^3 - 3*s*X*Y*Z", ParseContext::standard());
  const GriffithsDwork<RatFunQ> gd(F);
  const auto res = gd.picard_fuchs(gd.make_class(parse_poly<Rational>("1", ParseContext::standard()), 1));
  const Json j = io::to_json(res, F, "1");
  CHECK(j["order"] == 2);
  const auto back = io::picard_fuchs_from_json(j);
  CHECK(back.family == F);
  CHECK(back.coefficients == res.coefficients);
  CHECK(back.certificates.size() == res.certificates.size());

  Json other = j;
  other["family"] = "X^3 + Y^3 + Z^3 - 2*s*X*Y*Z";
  if (!res.certificates.empty()) CHECK_THROWS_AS(io::picard_fuchs_from_json(other), io::CertificateRejected);
  CHECK_NOTHROW(io::picard_fuchs_from_json(other, false));
  Json wrong = j;
  wrong["order"] = 3;
  CHECK_THROWS_AS(io::picard_fuchs_from_json(wrong), std::invalid_argument);
}

TEST_CASE("ODE JSON round trip") {
  LinearODE<Rational> L;
  L.var = "t";
  L.a = parse_ode<Rational>("y'' + ((17*t-8)/(9*t*(t-1)))*y' + (16/(81*t*(t-1)))*y = 0", ParseContext::standard("t"));
  const Json j = io::to_json(L);
  CHECK(j["order"] == 2);
  CHECK(j["coefficients"][0]["numerator"] == Json::array({"16/81"}));
  CHECK(j["coefficients"][0]["denominator"] == Json::array({"0", "-1", "1"}));
  CHECK(io::ode_from_json(j) == L);
  // The text form parses back to the same equation.
  CHECK(parse_ode<Rational>(j["text"].get<std::string>(), ParseContext::standard("t")) == L.a);
}
