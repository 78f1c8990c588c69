#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gtop {

struct CheckResult {
  std::string module;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // description of the first failing case
  /// Informational checks report counts but never fail the suite.
  bool informational = false;

  [[nodiscard]] bool ok() const { return informational || failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t simplex_budget = 200'000;
  std::size_t node_budget = 1'000'000;
  bool strict_spheres = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool ok() const;
};

/// Every module's invariants over a seeded corpus of small graphs and complexes.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace gtop
