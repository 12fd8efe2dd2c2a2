#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ualpha {

struct VerifyConfig {
  int max_level = 5;
  int max_steps = 6;
  std::uint64_t seed = 1;
  int vector_pairs = 100;
  int shell_samples = 20;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_counterexample;

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// Runs the invariant suite across every module. Output depends only on the
/// config, so equal seeds give identical reports.
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace ualpha
