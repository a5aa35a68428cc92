#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermat/report.hpp"
#include "hypermat/weights.hpp"

namespace hypermat {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::int64_t oracle_dmax = 12;
};

/// A named, runnable acceptance check. `number` is 0 for supplementary targets.
struct VerifyTarget {
  int number = 0;
  std::string_view name;
  std::string_view title;
  std::optional<double> time_limit_seconds;
  std::function<Report(const VerifyOptions&)> run;
};

struct VerifyOutcome {
  const VerifyTarget* target = nullptr;
  Report report;
  double seconds = 0;

  bool passed() const { return report.passed(); }
};

/// The nine acceptance criteria in order, followed by supplementary targets.
const std::vector<VerifyTarget>& verify_targets();

/// Only the numbered acceptance criteria.
std::vector<const VerifyTarget*> acceptance_criteria();

const VerifyTarget* find_verify_target(std::string_view name);

/// Runs the target and appends a wall-clock check when it has a time limit.
/// Exceptions thrown by the target become a failed check.
VerifyOutcome run_verify_target(const VerifyTarget& target, const VerifyOptions& options);

/// Sum-rule bookkeeping over a box of weights; exposed for tests and benchmarks.
struct SumRuleSummary {
  std::int64_t weights = 0;
  std::int64_t sh_checked = 0;
  std::int64_t sh_failures = 0;
  std::int64_t sqrt_checked = 0;           // D1 and G6 both known
  std::int64_t d1_unknown = 0;             // D1 fixed by the identity instead
  std::int64_t fourier_pairs_checked = 0;  // ... and compared with G6 forced at the Fourier image
  std::int64_t sqrt_skipped = 0;           // Fourier image outside the window
  std::int64_t sqrt_failures = 0;
  std::vector<TripleWeight> d1_determined_nonzero;
  /// c with euler_mult = [D1] + c [E] at every weight where D1 is unknown.
  std::optional<std::int64_t> euler_e_coefficient;
  std::vector<std::string> failure_examples;
};

SumRuleSummary check_sum_rules(std::int64_t lo, std::int64_t hi);

}  // namespace hypermat
