#pragma once

// Randomized exact cross-checks of the transform code against the free
// product model. Identical options give an identical report.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bifree {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr const char* kSeedEnvVar = "BIFREE_SEED";

struct SelfcheckOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Number of random cases per suite.
  std::size_t size = 10;
  /// Perturbs one oracle moment before the additivity comparison.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing case, empty on success.
  std::string detail;
};

/// Suites, in order: additivity, centered_factorization, subordination,
/// rank1_determination, independence_closure.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

std::string format_report(const SelfcheckOptions& options, const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace bifree
