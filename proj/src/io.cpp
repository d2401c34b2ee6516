#include "gdpf/io.hpp"

#include "gdpf/parser.hpp"

namespace gdpf::io {

namespace {

template <class K>
Json cert_json(const CofactorCertificate<K>& c, const std::string& param) {
  Json j;
  j["target"] = c.target.to_string(param);
  Json cof = Json::array();
  for (const auto& g : c.cofactors) cof.push_back(g.to_string(param));
  j["cofactors"] = cof;
  j["curve"] = c.curve.to_string(param);
  return j;
}

template <class K, class Parse>
CofactorCertificate<K> cert_from(const Json& j, Parse&& parse) {
  CofactorCertificate<K> c;
  c.target = parse(j.at("target").get<std::string>());
  for (const auto& g : j.at("cofactors")) c.cofactors.push_back(parse(g.get<std::string>()));
  c.curve = parse(j.at("curve").get<std::string>());
  if (c.cofactors.size() != c.curve.arity()) throw CertificateRejected("certificate: wrong number of cofactors");
  if (!c.verify()) throw CertificateRejected("certificate does not verify: target != sum of cofactors * partials");
  return c;
}

Json upoly_json(const UPoly<Rational>& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
  return a;
}

UPoly<Rational> upoly_from(const Json& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.push_back(parse_scalar<Rational>(x.get<std::string>(), ParseContext::standard()));
  return UPoly<Rational>(std::move(c));
}

}  // namespace

Json to_json(const CofactorCertificate<Rational>& c) { return cert_json(c, "s"); }
Json to_json(const CofactorCertificate<RatFunQ>& c, const std::string& param) { return cert_json(c, param); }

CofactorCertificate<Rational> certificate_from_json(const Json& j) {
  const ParseContext ctx = ParseContext::standard();
  return cert_from<Rational>(j, [&](const std::string& s) { return parse_constant_poly<Rational>(s, ctx); });
}

CofactorCertificate<RatFunQ> parametric_certificate_from_json(const Json& j, const std::string& param) {
  const ParseContext ctx = ParseContext::standard(param);
  return cert_from<RatFunQ>(j, [&](const std::string& s) { return parse_poly<Rational>(s, ctx); });
}

Json to_json(const PicardFuchsResult<RatFunQ>& r, const PolyQs& family, const std::string& section,
             const std::string& param) {
  Json j;
  j["family"] = family.to_string(param);
  j["section"] = section;
  j["parameter"] = param;
  j["order"] = r.order;
  Json co = Json::array();
  for (const auto& a : r.coefficients) co.push_back(a.to_string(param));
  j["coefficients"] = co;
  j["rank_profile"] = r.rank_profile;
  j["ode"] = to_ode(r, param).to_string();
  Json certs = Json::array();
  for (const auto& step : r.certificates) {
    Json c = to_json(step.certificate, param);
    c["pole"] = step.pole;
    certs.push_back(c);
  }
  j["certificates"] = certs;
  return j;
}

LoadedPicardFuchs picard_fuchs_from_json(const Json& j, bool verify) {
  LoadedPicardFuchs out;
  const std::string param = j.value("parameter", std::string("s"));
  const ParseContext ctx = ParseContext::standard(param);
  out.family = parse_poly<Rational>(j.at("family").get<std::string>(), ctx);
  out.section = j.at("section").get<std::string>();
  out.order = j.at("order").get<int>();
  for (const auto& a : j.at("coefficients")) out.coefficients.push_back(parse_ratfun<Rational>(a.get<std::string>(), ctx));
  if (static_cast<int>(out.coefficients.size()) != out.order)
    throw std::invalid_argument("Picard-Fuchs JSON: coefficient count does not match the order");
  for (const auto& c : j.at("certificates")) {
    if (!verify) {
      CofactorCertificate<RatFunQ> cert;
      cert.target = parse_poly<Rational>(c.at("target").get<std::string>(), ctx);
      for (const auto& g : c.at("cofactors")) cert.cofactors.push_back(parse_poly<Rational>(g.get<std::string>(), ctx));
      cert.curve = parse_poly<Rational>(c.at("curve").get<std::string>(), ctx);
      out.certificates.push_back(std::move(cert));
      continue;
    }
    auto cert = parametric_certificate_from_json(c, param);
    if (cert.curve != out.family) throw CertificateRejected("certificate refers to a different curve");
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

Json to_json(const LinearODE<Rational>& L) {
  Json j;
  j["variable"] = L.var;
  j["order"] = L.order();
  j["text"] = L.to_string();
  Json co = Json::array();
  for (const auto& a : L.a) co.push_back({{"numerator", upoly_json(a.num())}, {"denominator", upoly_json(a.den())}});
  j["coefficients"] = co;
  return j;
}

LinearODE<Rational> ode_from_json(const Json& j) {
  LinearODE<Rational> L;
  L.var = j.value("variable", std::string("t"));
  for (const auto& c : j.at("coefficients"))
    L.a.emplace_back(upoly_from(c.at("numerator")), upoly_from(c.at("denominator")));
  return L;
}

Json to_json(const ks::Report& r) {
  Json j;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace gdpf::io
