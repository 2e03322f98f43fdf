#ifndef CHEREDNIK_HARNESS_HPP
#define CHEREDNIK_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/gl_module.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/report.hpp"

namespace cherednik {

/// Configuration problems (unknown suite, bad module spec, invalid sizes): exit status 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string suite;
  int m = 2;
  int n = 1;
  int N = 2;
  std::vector<Rational> kappas{Rational(1), Rational(5, 2), Rational(-7, 3)};
  Rational level_offset = 0;
  int lo = -2, hi = 2;
  int depth = 2;
  int degree = 5;        // total degree bound for polynomial suites
  int bound_shift = 0;   // thm125: added to u_p (1 reads s_pp as the identity)
  long samples = 200;
  std::uint64_t seed = 1;
  std::vector<std::string> modules;  // aliases or JSON paths
  std::string format = "text";
  bool expect_fail = false;

  /// Throws ConfigError on an empty kappa list, empty window or bad sizes.
  void validate() const;
  std::map<std::string, std::string> echo() const;
};

/// "natural:m", "onedim:m:w1,...,wm", "trivial:m", "A*B" (tensor product), or a
/// JSON file {"m": int, "dim": int, "action": [matrix per E_ab, row-major a*m+b]}
/// with rational-string entries. Throws ConfigError (parse errors with location)
/// or ModuleError (violated bracket relation).
GlModule parse_module_spec(const std::string& spec);

using SuiteRunner = std::function<CheckReport(const RunConfig&)>;
const std::map<std::string, SuiteRunner>& suite_registry();

/// Runs the configured suite. With expect_fail the report gains an
/// "expected_failure" check that passes iff the underlying checks failed.
CheckReport run_suite(const RunConfig& config);

/// json: {suite, config, status, expect_fail, instances, total_instances,
/// failure_count, failures[{check, input, expected, actual}]}; text: summary.
std::string emit_report(const CheckReport& report, const RunConfig& config);

}  // namespace cherednik

#endif  // CHEREDNIK_HARNESS_HPP
