#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qtel/rng.hpp"

namespace qtel {

// Hard cap on simulator size: 2^26 amplitudes = 1 GiB of doubles.
inline constexpr int kMaxQubits = 26;

struct Gate1Q {
  std::complex<double> m00, m01, m10, m11;

  bool is_unitary(double tol = 1e-12) const;
};

namespace gates {

Gate1Q identity();
Gate1Q hadamard();
Gate1Q ry(double theta);  // [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
Gate1Q rz(double phi);    // diag(e^{-i phi/2}, e^{+i phi/2})
Gate1Q pauli_x();
Gate1Q pauli_y();
Gate1Q pauli_z();

}  // namespace gates

// Dense statevector over 2^n basis states.
//
// Qubit 0 is the most significant bit of the basis index: for three qubits
// the index reads (bit_0 bit_1 bit_2). A measured bit of 0 maps to the
// value +1, a bit of 1 to -1.
//
// Operations take the state by value and return the transformed state;
// std::move the argument to avoid the copy. A StateVector is never mutated
// through a const reference, so values are safe to share across threads.
class StateVector {
 public:
  static StateVector from_amplitudes(int n_qubits,
                                     std::vector<std::complex<double>> amps);

  int num_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::size_t index) const {
    return amps_[index];
  }

  double norm_sq() const;

  // Index bit owned by a qubit under the MSB-first convention.
  std::size_t qubit_mask(int qubit) const;

 private:
  StateVector(int n_qubits, std::vector<std::complex<double>> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  friend StateVector zero_state(int n_qubits);
  friend StateVector apply_single(StateVector state, const Gate1Q& gate,
                                  int target);
  friend StateVector apply_cnot(StateVector state, int control, int target);

  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

struct MeasurementOutcome {
  std::uint64_t basis_index = 0;
  std::vector<int> qubit_values;  // +1 for bit 0, -1 for bit 1
};

// |0...0>
StateVector zero_state(int n_qubits);

StateVector apply_single(StateVector state, const Gate1Q& gate, int target);
StateVector apply_cnot(StateVector state, int control, int target);

std::vector<double> probability_distribution(const StateVector& state);

// <Z> on one qubit: P(bit = 0) - P(bit = 1).
double expectation_z(const StateVector& state, int qubit);

// One projective Z-basis shot of every qubit. The basis index is drawn from
// |amps|^2 by a sequential scalar walk, so a fixed stream position always
// yields the same outcome.
MeasurementOutcome sample_all_z(const StateVector& state, RngStream& rng);

// |<a|b>|^2, clamped into [0, 1].
double state_fidelity(const StateVector& a, const StateVector& b);

}  // namespace qtel
