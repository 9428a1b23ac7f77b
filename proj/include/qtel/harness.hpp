#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qtel/metrics.hpp"
#include "qtel/protocol.hpp"

namespace qtel::harness {

struct ExperimentSpec {
  protocol::ProtocolConfig protocol{};
  protocol::MessageParams msg{};
  int n_trials = 20;
  std::uint64_t seed = 42;
  int parallelism = 1;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<metrics::TrialRecord> records;  // trial_id 1..n_trials, in order
  metrics::SummaryStats summary;
  std::uint64_t total_attempts = 0;  // run_attempt invocations across trials
};

// The pinned reference configuration: theta=pi/4, phi=pi/2, gamma=-0.5,
// max_retries=5, 20 trials, sampled detection, no injected noise, seed 42.
ExperimentSpec reference_spec();

// Runs spec.n_trials trials. Trial i draws from substream(seed, i), so the
// result is a pure function of the spec and independent of parallelism.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Reruns the experiment once per gamma (same seed) and pairs each gamma
// with its summary. Every gamma must lie in [-1, 1].
std::vector<std::pair<double, metrics::SummaryStats>> gamma_sweep(
    const ExperimentSpec& spec, std::span<const double> gammas);

// Reset arm: cfg as given. Baseline arm: max_retries forced to 1. The arms
// draw from independent substreams of `seed`.
metrics::ComparisonReport compare_reset_vs_baseline(
    const protocol::ProtocolConfig& cfg, const protocol::MessageParams& msg,
    int n_trials, std::uint64_t seed);

}  // namespace qtel::harness
