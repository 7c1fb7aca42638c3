#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace rlvqc::sim {

using cplx = std::complex<double>;

// Amplitude-array kernels. The array holds the 2^n amplitudes of an
// n-qubit register; basis index i stores the value of qubit k in bit k.
//
// The scalar table is the reference implementation. SIMD tables must be
// bit-identical to it: same operation order per element, no FMA
// contraction, and reductions over a fixed 4-lane accumulator tree.
// kernel equivalence tests assert bitwise equality across backends.
struct KernelTable {
    const char* name;

    // u is 2x2 row-major; updates the (target=0, target=1) amplitude pairs.
    void (*apply_1q)(cplx* amps, int n_qubits, int target, const cplx* u);

    // u is 4x4 row-major over the local index bit(q0)*2 + bit(q1).
    void (*apply_2q)(cplx* amps, int n_qubits, int q0, int q1, const cplx* u);

    // diagonal 1-qubit gate: multiply by d0 where target=0, d1 where target=1
    void (*apply_diag1)(cplx* amps, int n_qubits, int target, cplx d0, cplx d1);

    // diagonal 2-qubit phase keyed on bit(q0) XOR bit(q1)
    void (*apply_parity_phase)(cplx* amps, int n_qubits, int q0, int q1, cplx even, cplx odd);

    // controlled-X; a pure amplitude permutation
    void (*apply_cx)(cplx* amps, int n_qubits, int control, int target);

    void (*probabilities)(const cplx* amps, std::size_t dim, double* out);
    double (*norm_sq)(const cplx* amps, std::size_t dim);

    // sum_i |amps[i]|^2 * weights[i]
    double (*weighted_prob_sum)(const cplx* amps, std::size_t dim, const double* weights);
};

const KernelTable& scalar_kernels();

// Backends usable on this build + CPU, scalar first.
std::span<const KernelTable* const> available_kernels();

// Widest available backend, or the one named by RLVQC_KERNELS (resolved
// once at first use).
const KernelTable& active_kernels();

}  // namespace rlvqc::sim
