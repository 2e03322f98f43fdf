#include "cherednik/report.hpp"

namespace cherednik {

long CheckReport::total_instances() const {
  long n = 0;
  for (const auto& [_, c] : instances) n += c;
  return n;
}

void CheckReport::fail(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(f));
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& [k, c] : other.instances) instances[k] += c;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxWitnesses) failures.push_back(f);
  failure_count += other.failure_count;
}

void CheckReport::merge_prefixed(const std::string& prefix, const CheckReport& other) {
  for (const auto& [k, c] : other.instances) instances[prefix + ":" + k] += c;
  for (auto f : other.failures) {
    if (failures.size() >= kMaxWitnesses) break;
    f.check = prefix + ":" + f.check;
    failures.push_back(std::move(f));
  }
  failure_count += other.failure_count;
}

void expect_true(CheckReport& rep, const std::string& check, bool ok,
                 const std::string& input, const std::string& detail) {
  rep.count(check);
  if (!ok) rep.fail({check, input, "true", detail.empty() ? "false" : detail});
}

}  // namespace cherednik
