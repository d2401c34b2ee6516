#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it in-process.

#include "gdpf/io.hpp"
#include "gdpf/kenyon_smillie.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gdpf::cli {

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2 };

/// An expression with its parameter name and where it came from.
struct Input {
  std::string text;
  std::string parameter;
  std::string origin;
};

/// Built-in inputs by name: families (ks, ks-t, f0, f1, f-inf, hesse) and
/// equations (L1, L2, L3, ks-x).
const std::map<std::string, Input>& builtins();

/// A built-in name, a file, or the literal expression. Files may contain
/// '#' comments and a "parameter NAME" line.
Input resolve_input(const std::string& arg, const std::string& default_parameter);
Input parse_input_file(const std::string& content, const std::string& default_parameter, const std::string& origin);

struct SuiteOptions {
  GaloisConvention convention = GaloisConvention::fix_zeta3;
  std::uint64_t seed = 1;
  /// Empty means all.
  std::vector<std::string> checks;
};

/// Names of the verify-paper checks, sorted.
std::vector<std::string> suite_keys();

/// The fixed t-samples plus one random rational drawn from `seed`.
std::vector<Rational> suite_t_samples(std::uint64_t seed);

/// Runs the selected checks; keys are sorted. Throws std::invalid_argument
/// for an unknown key.
std::map<std::string, ks::Report> paper_suite(const SuiteOptions& opt);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal = false);

}  // namespace gdpf::cli
