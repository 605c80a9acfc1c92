#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qig {

struct FailureRecord {
  int index = 0;          // trial or grid index
  std::string label;      // metric / case description
  double violation = 0.0;
};

/// Outcome of one property suite: seeded, reproducible, and serializable.
/// max_violation is tracked even when every trial passes.
struct PropertyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int failures = 0;
  double max_violation = 0.0;
  std::vector<FailureRecord> details;  // first kMaxDetails failures only

  static constexpr int kMaxDetails = 16;

  bool passed() const { return failures == 0; }

  void record(bool ok, double violation, int index, const std::string& label) {
    ++trials;
    if (violation > max_violation) max_violation = violation;
    if (!ok) {
      ++failures;
      if (static_cast<int>(details.size()) < kMaxDetails)
        details.push_back({index, label, violation});
    }
  }

  /// Fold a sub-report (e.g. one metric's share of a suite) into this one.
  void merge(const PropertyReport& other) {
    trials += other.trials;
    failures += other.failures;
    if (other.max_violation > max_violation) max_violation = other.max_violation;
    for (const auto& d : other.details)
      if (static_cast<int>(details.size()) < kMaxDetails) details.push_back(d);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    j["failures"] = failures;
    j["max_violation"] = max_violation;
    auto cases = nlohmann::ordered_json::array();
    for (const auto& d : details) {
      cases.push_back({{"index", d.index}, {"label", d.label}, {"violation", d.violation}});
    }
    j["failure_cases"] = cases;
    return j;
  }
};

}  // namespace qig
