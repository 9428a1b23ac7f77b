#pragma once

#include <optional>
#include <span>
#include <vector>

namespace qtel::metrics {

struct TrialResults {
  int alice = 0;    // +1 or -1
  int bob = 0;
  int charlie = 0;

  friend bool operator==(const TrialResults&, const TrialResults&) = default;
};

// One row of the trial log. Results are all present (a recorded attempt
// passed) or all absent (every attempt detected interference); absence
// implies fidelity 0.
struct TrialRecord {
  int trial_id = 0;
  int attempts = 0;
  bool interference_detected = false;
  std::optional<TrialResults> results;
  int fidelity = 0;  // binary: 0 or 1

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SummaryStats {
  int n_trials = 0;
  double detection_rate = 0.0;
  int success_count = 0;
  double mean_fidelity_all = 0.0;
  std::optional<double> mean_fidelity_success;   // absent when no successes
  std::optional<double> mean_attempts_success;   // absent when no successes
  int max_retry_aborts = 0;  // records with null results

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

struct ComparisonReport {
  SummaryStats reset;     // configured max_retries
  SummaryStats baseline;  // max_retries forced to 1
  double reset_failure_rate = 0.0;
  double baseline_failure_rate = 0.0;
  // (baseline - reset) / baseline; absent when the baseline never fails.
  std::optional<double> failure_reduction;
};

// Sign of cos^2(theta/2) - 0.5; the tie at theta = pi/2 resolves to +1.
int expected_sign(double theta);

// 1 iff Bob's measured value equals the expected sign. Inputs must be +-1.
int binary_fidelity(int bob_result, int expected);

// Aggregates a non-empty record list. mean_attempts_success averages the
// attempts of fidelity-1 records and is absent when there are none.
SummaryStats summarize(std::span<const TrialRecord> records);

// failure = fidelity 0; reduction = (baseline - reset) / baseline.
ComparisonReport make_comparison(const SummaryStats& reset,
                                 const SummaryStats& baseline);

}  // namespace qtel::metrics
