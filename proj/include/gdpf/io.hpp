#pragma once

// JSON serialization of certificates, Picard-Fuchs results, ODEs and
// verification reports. Field elements and polynomials are stored as exact
// strings in the parser's syntax.

#include "gdpf/fuchsian.hpp"
#include "gdpf/griffiths_dwork.hpp"
#include "gdpf/jacobian.hpp"
#include "gdpf/kenyon_smillie.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gdpf::io {

using Json = nlohmann::ordered_json;

class CertificateRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const CofactorCertificate<Rational>& c);
Json to_json(const CofactorCertificate<RatFunQ>& c, const std::string& param = "s");

/// Parses and re-verifies; throws CertificateRejected when the identity fails.
CofactorCertificate<Rational> certificate_from_json(const Json& j);
CofactorCertificate<RatFunQ> parametric_certificate_from_json(const Json& j, const std::string& param = "s");

Json to_json(const PicardFuchsResult<RatFunQ>& r, const PolyQs& family, const std::string& section,
             const std::string& param = "s");

struct LoadedPicardFuchs {
  PolyQs family;
  std::string section;
  int order = 0;
  std::vector<RatFunQ> coefficients;
  std::vector<CofactorCertificate<RatFunQ>> certificates;
};
/// With `verify`, every certificate is re-checked against the stored family.
LoadedPicardFuchs picard_fuchs_from_json(const Json& j, bool verify = true);

Json to_json(const LinearODE<Rational>& L);
LinearODE<Rational> ode_from_json(const Json& j);

Json to_json(const ks::Report& r);

}  // namespace gdpf::io
