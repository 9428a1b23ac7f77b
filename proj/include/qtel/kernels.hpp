#pragma once

#include <complex>
#include <cstddef>

namespace qtel::kernels {

enum class Backend { scalar, avx2 };

// Inner-loop kernels over an interleaved complex amplitude array.
// `dim` is the number of complex amplitudes (always a power of two).
//
// apply_gate1q, apply_cnot and abs_sq are element-wise and produce
// bit-identical results on every backend: no FMA contraction, identical
// per-element operation order. Reductions (sum_abs_sq, z_expectation,
// inner_product) may reassociate the accumulation and only have to match
// the scalar backend to ~1e-13 relative.
struct Ops {
  const char* name;

  // In-place 2x2 gate on the qubit whose index bit is `target_stride`
  // (amplitudes pair up as i, i + target_stride). m = {m00, m01, m10, m11}.
  void (*apply_gate1q)(std::complex<double>* amps, std::size_t dim,
                       std::size_t target_stride,
                       const std::complex<double>* m);

  // Swaps amps[k] <-> amps[k | target_mask] for every k with the control
  // bit set and the target bit clear.
  void (*apply_cnot)(std::complex<double>* amps, std::size_t dim,
                     std::size_t control_mask, std::size_t target_mask);

  // out[k] = |amps[k]|^2
  void (*abs_sq)(const std::complex<double>* amps, std::size_t dim,
                 double* out);

  double (*sum_abs_sq)(const std::complex<double>* amps, std::size_t dim);

  // P(bit clear) - P(bit set) for the given index bit.
  double (*z_expectation)(const std::complex<double>* amps, std::size_t dim,
                          std::size_t bit_mask);

  // <bra|ket> = sum conj(bra[k]) * ket[k]
  std::complex<double> (*inner_product)(const std::complex<double>* bra,
                                        const std::complex<double>* ket,
                                        std::size_t dim);
};

bool available(Backend b);
const Ops& ops(Backend b);  // throws std::invalid_argument if unavailable

// Active table. Picked once at first use: QTEL_KERNEL=scalar|avx2 overrides,
// otherwise the best available backend wins.
const Ops& active();
Backend active_backend();
void set_backend(Backend b);  // throws std::invalid_argument if unavailable

}  // namespace qtel::kernels
