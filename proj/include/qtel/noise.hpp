#pragma once

#include <optional>
#include <string_view>

#include "qtel/rng.hpp"
#include "qtel/statevector.hpp"

namespace qtel::noise {

// Charlie holds the third wire of the protocol register.
inline constexpr int kCharlieQubit = 2;

enum class NoiseModel {
  none,
  x_flip_charlie,    // Pauli-X on Charlie's qubit
  ry_kick_charlie,   // ry(kick_angle) on Charlie's qubit
  random_pauli_any,  // uniformly chosen Pauli on a uniformly chosen qubit
  force_detect,      // no gate; detection is forced for the attempt
};

struct NoiseConfig {
  NoiseModel model = NoiseModel::none;
  double p_interf = 0.0;   // injection probability per attempt
  double kick_angle = 0.0; // used by ry_kick_charlie
};

struct InjectionReport {
  bool injected = false;
  std::optional<int> target_qubit;
  NoiseModel applied_model = NoiseModel::none;
};

struct InterferenceResult {
  StateVector state;
  InjectionReport report;
};

// Throws std::invalid_argument for p_interf outside [0,1] or a non-finite
// kick angle.
void validate(const NoiseConfig& cfg);

// Disturbs the state with probability cfg.p_interf. Charlie-targeted models
// require at least three qubits. force_detect always injects (it exists for
// deterministic retry-ceiling tests) but leaves the state untouched; the
// protocol layer honors its detection contract.
InterferenceResult apply_interference(StateVector state, const NoiseConfig& cfg,
                                      RngStream& rng);

std::string_view to_string(NoiseModel model);
std::optional<NoiseModel> noise_model_from_string(std::string_view name);

}  // namespace qtel::noise
