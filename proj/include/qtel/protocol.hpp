#pragma once

#include <atomic>
#include <cstdint>
#include <numbers>

#include "qtel/metrics.hpp"
#include "qtel/noise.hpp"
#include "qtel/rng.hpp"
#include "qtel/statevector.hpp"

namespace qtel::protocol {

// Register layout: qubit 0 = Alice (sender), 1 = Bob (receiver),
// 2 = Charlie (controller/watchdog).
inline constexpr int kAliceQubit = 0;
inline constexpr int kBobQubit = 1;
inline constexpr int kNumQubits = 3;

struct MessageParams {
  double theta = std::numbers::pi / 4;
  double phi = std::numbers::pi / 2;
};

enum class DetectionSource {
  sampled,            // Charlie's +-1 from the single shot
  exact_expectation,  // <Z> on Charlie's wire, computed before sampling
};

struct ProtocolConfig {
  double gamma = -0.5;  // interference threshold on Charlie's Z value
  int max_retries = 5;
  DetectionSource detection_source = DetectionSource::sampled;
  noise::NoiseConfig noise{};
  // Classical X correction of Bob's bit from Alice's bit (extension mode;
  // the base protocol applies no corrections).
  bool apply_corrections = false;
  // Alternative orientation of the Bob-Charlie CNOT (control=Charlie).
  bool charlie_control_reversed = false;
};

struct AttemptOutcome {
  int alice_result = 0;  // +-1
  int bob_result = 0;
  int charlie_result = 0;
  double z_c_value = 0.0;  // quantity compared against gamma
  bool detected = false;
  noise::InjectionReport injection;
};

// Entangling chain: H(0), CNOT(0->1), H(1), CNOT(1->2). Expects 3 qubits.
StateVector build_channel(StateVector state);

// ry(theta) then rz(phi) on Alice's wire.
StateVector encode_message(StateVector state, const MessageParams& msg);

// CNOT(0->1) then H(0).
StateVector bell_measurement_basis(StateVector state);

// CNOT(1->2) then H(2); `reversed` flips the CNOT orientation.
StateVector charlie_control(StateVector state, bool reversed = false);

// Interference iff z_value < gamma (strict). Both inputs must lie in
// [-1, 1] (a hair of numerical slack is tolerated on z_value).
bool detect_interference(double z_value, double gamma);

// Full pre-noise circuit on |000>.
StateVector pipeline_state(const MessageParams& msg,
                           bool charlie_reversed = false);

// One attempt: circuit, interference injection, single Z-basis shot of all
// three qubits. Fills z_c_value per cfg.detection_source and evaluates the
// detection predicate (force_detect noise forces detected = true).
AttemptOutcome run_attempt(const ProtocolConfig& cfg, const MessageParams& msg,
                           RngStream& rng);

// Retry loop: up to cfg.max_retries attempts, stopping at the first attempt
// that passes. A trial that never passes records null results and fidelity 0.
// attempt_tally, when given, is incremented once per run_attempt invocation.
metrics::TrialRecord run_trial(const ProtocolConfig& cfg,
                               const MessageParams& msg, RngStream& rng,
                               std::atomic<std::uint64_t>* attempt_tally = nullptr);

}  // namespace qtel::protocol
