#pragma once

#include "rlvqc/sim/kernels.hpp"

#include <algorithm>
#include <cstddef>

// Shared between the scalar and SIMD translation units so tail paths use
// exactly the same arithmetic as the reference kernels.
namespace rlvqc::sim::detail {

// Textbook complex product: re = ar*br - ai*bi, im = ar*bi + ai*br.
// Matches the mul/permute/addsub sequence used by the SIMD paths, so both
// round identically. std::complex::operator* is avoided on purpose.
inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline cplx cadd(cplx a, cplx b) { return {a.real() + b.real(), a.imag() + b.imag()}; }

inline void pair_update_1q(cplx* amps, std::size_t i0, std::size_t i1, const cplx* u) {
    const cplx x = amps[i0];
    const cplx y = amps[i1];
    amps[i0] = cadd(cmul(u[0], x), cmul(u[1], y));
    amps[i1] = cadd(cmul(u[2], x), cmul(u[3], y));
}

inline void quad_update_2q(cplx* amps, std::size_t base, std::size_t b0, std::size_t b1,
                           const cplx* u) {
    const cplx x0 = amps[base];
    const cplx x1 = amps[base + b1];
    const cplx x2 = amps[base + b0];
    const cplx x3 = amps[base + b0 + b1];
    for (int row = 0; row < 4; ++row) {
        const cplx* m = u + 4 * row;
        const cplx r = cadd(cadd(cadd(cmul(m[0], x0), cmul(m[1], x1)), cmul(m[2], x2)),
                            cmul(m[3], x3));
        const std::size_t off = (row & 2 ? b0 : 0) + (row & 1 ? b1 : 0);
        amps[base + off] = r;
    }
}

// Reduction tail: lane j accumulates element i with j = i mod 4, matching
// the SIMD accumulator layout.
inline void norm_tail(const cplx* amps, std::size_t begin, std::size_t dim, double acc[4]) {
    for (std::size_t i = begin; i < dim; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        acc[i % 4] += re * re + im * im;
    }
}

inline void weighted_tail(const cplx* amps, const double* w, std::size_t begin, std::size_t dim,
                          double acc[4]) {
    for (std::size_t i = begin; i < dim; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        acc[i % 4] += (re * re + im * im) * w[i];
    }
}

// Final tree: (A0+A2) + (A1+A3), identical to the 128-bit fold + scalar add
// the SIMD backends perform.
inline double reduce4(const double acc[4]) { return (acc[0] + acc[2]) + (acc[1] + acc[3]); }

void scalar_apply_cx(cplx* amps, int n_qubits, int control, int target);

}  // namespace rlvqc::sim::detail
