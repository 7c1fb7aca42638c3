// AVX2 variants of the amplitude kernels. Each path performs the same
// per-element operations in the same order as the scalar reference (mul,
// mul, add/sub; no FMA), so results are bit-identical across backends.

#if defined(__x86_64__) || defined(__amd64__)

#include "kernels_detail.hpp"

#include <immintrin.h>

namespace rlvqc::sim {
namespace {

// two packed complex per __m256d: [re0, im0, re1, im1]

inline __m256d load2(const cplx* a) {
    return _mm256_loadu_pd(reinterpret_cast<const double*>(a));
}

inline void store2(cplx* a, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(a), v); }

inline __m256d bcast(cplx m) {
    return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&m));
}

// lanewise complex product; rounding matches detail::cmul
inline __m256d cmul2(__m256d v, __m256d m) {
    const __m256d mre = _mm256_movedup_pd(m);
    const __m256d mim = _mm256_permute_pd(m, 0b1111);
    const __m256d t1 = _mm256_mul_pd(v, mre);
    const __m256d vs = _mm256_permute_pd(v, 0b0101);
    const __m256d t2 = _mm256_mul_pd(vs, mim);
    return _mm256_addsub_pd(t1, t2);
}

void v_apply_1q(cplx* amps, int n_qubits, int target, const cplx* u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    const __m256d u00 = bcast(u[0]), u01 = bcast(u[1]);
    const __m256d u10 = bcast(u[2]), u11 = bcast(u[3]);
    if (bit >= 2) {
        for (std::size_t base = 0; base < dim; base += 2 * bit)
            for (std::size_t k = 0; k < bit; k += 2) {
                cplx* x = amps + base + k;
                cplx* y = x + bit;
                const __m256d X = load2(x), Y = load2(y);
                store2(x, _mm256_add_pd(cmul2(X, u00), cmul2(Y, u01)));
                store2(y, _mm256_add_pd(cmul2(X, u10), cmul2(Y, u11)));
            }
    } else if (dim >= 4) {
        // target 0: pairs are adjacent; deinterleave two pairs per step
        for (std::size_t i = 0; i < dim; i += 4) {
            const __m256d v1 = load2(amps + i), v2 = load2(amps + i + 2);
            const __m256d X = _mm256_permute2f128_pd(v1, v2, 0x20);
            const __m256d Y = _mm256_permute2f128_pd(v1, v2, 0x31);
            const __m256d X2 = _mm256_add_pd(cmul2(X, u00), cmul2(Y, u01));
            const __m256d Y2 = _mm256_add_pd(cmul2(X, u10), cmul2(Y, u11));
            store2(amps + i, _mm256_permute2f128_pd(X2, Y2, 0x20));
            store2(amps + i + 2, _mm256_permute2f128_pd(X2, Y2, 0x31));
        }
    } else {
        detail::pair_update_1q(amps, 0, 1, u);
    }
}

void v_apply_2q(cplx* amps, int n_qubits, int q0, int q1, const cplx* u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t lo = std::min(b0, b1);
    const std::size_t hi = std::max(b0, b1);
    if (lo < 2) {
        for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
            for (std::size_t mid = 0; mid < hi; mid += 2 * lo)
                for (std::size_t k = 0; k < lo; ++k)
                    detail::quad_update_2q(amps, outer + mid + k, b0, b1, u);
        return;
    }
    __m256d m[16];
    for (int e = 0; e < 16; ++e) m[e] = bcast(u[e]);
    for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
        for (std::size_t mid = 0; mid < hi; mid += 2 * lo)
            for (std::size_t k = 0; k < lo; k += 2) {
                const std::size_t base = outer + mid + k;
                const __m256d x0 = load2(amps + base);
                const __m256d x1 = load2(amps + base + b1);
                const __m256d x2 = load2(amps + base + b0);
                const __m256d x3 = load2(amps + base + b0 + b1);
                for (int row = 0; row < 4; ++row) {
                    const __m256d r = _mm256_add_pd(
                        _mm256_add_pd(_mm256_add_pd(cmul2(x0, m[4 * row]), cmul2(x1, m[4 * row + 1])),
                                      cmul2(x2, m[4 * row + 2])),
                        cmul2(x3, m[4 * row + 3]));
                    const std::size_t off = (row & 2 ? b0 : 0) + (row & 1 ? b1 : 0);
                    store2(amps + base + off, r);
                }
            }
}

void v_apply_diag1(cplx* amps, int n_qubits, int target, cplx d0, cplx d1) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    if (bit >= 2) {
        const __m256d v0 = bcast(d0), v1 = bcast(d1);
        for (std::size_t base = 0; base < dim; base += 2 * bit)
            for (std::size_t k = 0; k < bit; k += 2) {
                cplx* x = amps + base + k;
                cplx* y = x + bit;
                store2(x, cmul2(load2(x), v0));
                store2(y, cmul2(load2(y), v1));
            }
    } else {
        const cplx pat[2] = {d0, d1};
        const __m256d m = load2(pat);
        for (std::size_t i = 0; i < dim; i += 2) store2(amps + i, cmul2(load2(amps + i), m));
    }
}

void v_apply_parity_phase(cplx* amps, int n_qubits, int q0, int q1, cplx even, cplx odd) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t lo = std::min(b0, b1);
    const std::size_t hi = std::max(b0, b1);
    if (lo >= 2) {
        const __m256d ve = bcast(even), vo = bcast(odd);
        for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
            for (std::size_t mid = 0; mid < hi; mid += 2 * lo)
                for (std::size_t k = 0; k < lo; k += 2) {
                    cplx* base = amps + outer + mid + k;
                    store2(base, cmul2(load2(base), ve));
                    store2(base + b1, cmul2(load2(base + b1), vo));
                    store2(base + b0, cmul2(load2(base + b0), vo));
                    store2(base + b0 + b1, cmul2(load2(base + b0 + b1), ve));
                }
    } else {
        // one qubit is bit 0: phases alternate inside a register
        const cplx eo[2] = {even, odd};
        const cplx oe[2] = {odd, even};
        const __m256d veo = load2(eo), voe = load2(oe);
        for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
            for (std::size_t mid = 0; mid < hi; mid += 2) {
                cplx* a = amps + outer + mid;
                store2(a, cmul2(load2(a), veo));
                store2(a + hi, cmul2(load2(a + hi), voe));
            }
    }
}

// squared magnitudes of 4 consecutive amplitudes, in element order
inline __m256d probs4(const cplx* a) {
    const __m256d v1 = load2(a), v2 = load2(a + 2);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v1, v1), _mm256_mul_pd(v2, v2));
    return _mm256_permute4x64_pd(h, 0xD8);
}

void v_probabilities(const cplx* amps, std::size_t dim, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4) _mm256_storeu_pd(out + i, probs4(amps + i));
    for (; i < dim; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        out[i] = re * re + im * im;
    }
}

inline double fold4(__m256d acc) {
    const __m128d v =
        _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    return _mm_cvtsd_f64(v) + _mm_cvtsd_f64(_mm_unpackhi_pd(v, v));
}

double v_norm_sq(const cplx* amps, std::size_t dim) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4) acc = _mm256_add_pd(acc, probs4(amps + i));
    if (i == dim) return fold4(acc);
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    detail::norm_tail(amps, i, dim, lanes);
    return detail::reduce4(lanes);
}

double v_weighted_prob_sum(const cplx* amps, std::size_t dim, const double* w) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(probs4(amps + i), _mm256_loadu_pd(w + i)));
    if (i == dim) return fold4(acc);
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    detail::weighted_tail(amps, w, i, dim, lanes);
    return detail::reduce4(lanes);
}

}  // namespace

namespace detail {

const KernelTable* avx2_table() {
    static const KernelTable table{
        "avx2",         v_apply_1q, v_apply_2q,         v_apply_diag1,
        v_apply_parity_phase, scalar_apply_cx,      v_probabilities, v_norm_sq,
        v_weighted_prob_sum,
    };
    return &table;
}

}  // namespace detail
}  // namespace rlvqc::sim

#endif  // x86
