#pragma once

#include <doctest.h>

#include "gdpf/ratfun.hpp"

namespace doctest {
template <>
struct StringMaker<gdpf::NFElem> {
  static String convert(const gdpf::NFElem& x) { return gdpf::to_string(x).c_str(); }
};
template <>
struct StringMaker<gdpf::Rational> {
  static String convert(const gdpf::Rational& x) { return gdpf::to_string(x).c_str(); }
};
}  // namespace doctest
