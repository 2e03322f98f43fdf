#ifndef CHEREDNIK_REPORT_HPP
#define CHEREDNIK_REPORT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cherednik {

/// One violated instance of an identity, rendered exactly.
struct Failure {
  std::string check;
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of a verification run. status is "pass" iff no failure was
/// recorded; at most kMaxWitnesses failures are stored verbatim.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string name;
  std::map<std::string, std::string> params;
  std::map<std::string, long> instances;
  std::vector<Failure> failures;
  long failure_count = 0;

  bool passed() const { return failure_count == 0; }
  std::string status() const { return passed() ? "pass" : "fail"; }
  long total_instances() const;

  void count(const std::string& check, long n = 1) { instances[check] += n; }
  void fail(Failure f);
  /// Adds the other report's counts and failures (in order) to this one.
  void merge(const CheckReport& other);
  /// Merges `other` with every check name prefixed by `prefix` + ":".
  void merge_prefixed(const std::string& prefix, const CheckReport& other);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Records a pass/fail boolean check with a textual witness.
void expect_true(CheckReport& rep, const std::string& check, bool ok,
                 const std::string& input, const std::string& detail = {});

}  // namespace cherednik

#endif  // CHEREDNIK_REPORT_HPP
