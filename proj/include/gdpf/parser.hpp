#pragma once

// Text syntax for polynomials, rational functions, points, ODEs and field
// definitions. Precedence: ^ binds tighter than unary minus, which binds
// tighter than * and /, then + and -.

#include "gdpf/multipoly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpf {

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected = {});
  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& message() const { return message_; }
  /// Message with the offending line and a caret marker.
  std::string render(const std::string& source) const;

 private:
  std::string message_;
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Names known to the parser.
struct ParseContext {
  VarNames vars = xyz_names();
  /// Name of the rational-function parameter; empty disables it.
  std::string param = "s";
  /// Named constants, e.g. field generators.
  std::map<std::string, NFElem> constants;
  /// Fields declared with `field` definitions, by name.
  std::map<std::string, FieldHandle> fields;

  /// Variables X, Y, Z; parameter `param`; constants v (in Q(v)), zeta9,
  /// zeta3 and u (in the orbifold tower).
  static ParseContext standard(const std::string& param = "s");
  /// As standard(), but v = zeta9 + zeta9^8 lives in Q(zeta9).
  static ParseContext cyclotomic(const std::string& param = "s");
};

/// Parametric polynomial. Coefficient field Rational (no field constants
/// allowed) or NFElem.
template <class C>
MultiPoly<RationalFunction<C>> parse_poly(const std::string& text, const ParseContext& ctx);

/// Polynomial with constant coefficients (the parameter is rejected).
template <class C>
MultiPoly<C> parse_constant_poly(const std::string& text, const ParseContext& ctx);

/// Rational function in the parameter.
template <class C>
RationalFunction<C> parse_ratfun(const std::string& text, const ParseContext& ctx);

/// A field element (no variables, no parameter).
template <class C>
C parse_scalar(const std::string& text, const ParseContext& ctx);

/// Homogeneous coordinates "(a:b:c)".
template <class C>
std::array<C, 3> parse_point(const std::string& text, const ParseContext& ctx);

/// Linear homogeneous ODE "y'' + a*y' + b*y = 0" in the parameter. Returns
/// the monic coefficients a_0..a_{r-1} (the leading one is dropped).
template <class C>
std::vector<RationalFunction<C>> parse_ode(const std::string& text, const ParseContext& ctx,
                                           const std::string& unknown = "y");

/// "field NAME = BASE[g]/(poly in g)" where BASE is Q or a declared field.
/// Registers the field and its generator in ctx; returns the field.
FieldHandle parse_field_definition(const std::string& text, ParseContext& ctx);

}  // namespace gdpf
