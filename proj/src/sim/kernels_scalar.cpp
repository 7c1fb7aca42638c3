#include "kernels_detail.hpp"

#include <utility>

namespace rlvqc::sim {
namespace {

using detail::cadd;
using detail::cmul;

void s_apply_1q(cplx* amps, int n_qubits, int target, const cplx* u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t base = 0; base < dim; base += 2 * bit)
        for (std::size_t k = 0; k < bit; ++k)
            detail::pair_update_1q(amps, base + k, base + k + bit, u);
}

void s_apply_2q(cplx* amps, int n_qubits, int q0, int q1, const cplx* u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t lo = std::min(b0, b1);
    const std::size_t hi = std::max(b0, b1);
    for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
        for (std::size_t mid = 0; mid < hi; mid += 2 * lo)
            for (std::size_t k = 0; k < lo; ++k)
                detail::quad_update_2q(amps, outer + mid + k, b0, b1, u);
}

void s_apply_diag1(cplx* amps, int n_qubits, int target, cplx d0, cplx d1) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t base = 0; base < dim; base += 2 * bit)
        for (std::size_t k = 0; k < bit; ++k) {
            amps[base + k] = cmul(amps[base + k], d0);
            amps[base + k + bit] = cmul(amps[base + k + bit], d1);
        }
}

void s_apply_parity_phase(cplx* amps, int n_qubits, int q0, int q1, cplx even, cplx odd) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t lo = std::min(b0, b1);
    const std::size_t hi = std::max(b0, b1);
    for (std::size_t outer = 0; outer < dim; outer += 2 * hi)
        for (std::size_t mid = 0; mid < hi; mid += 2 * lo)
            for (std::size_t k = 0; k < lo; ++k) {
                const std::size_t base = outer + mid + k;
                amps[base] = cmul(amps[base], even);
                amps[base + b1] = cmul(amps[base + b1], odd);
                amps[base + b0] = cmul(amps[base + b0], odd);
                amps[base + b0 + b1] = cmul(amps[base + b0 + b1], even);
            }
}

void s_probabilities(const cplx* amps, std::size_t dim, double* out) {
    for (std::size_t i = 0; i < dim; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        out[i] = re * re + im * im;
    }
}

double s_norm_sq(const cplx* amps, std::size_t dim) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4)
        for (int j = 0; j < 4; ++j) {
            const double re = amps[i + j].real();
            const double im = amps[i + j].imag();
            acc[j] += re * re + im * im;
        }
    detail::norm_tail(amps, i, dim, acc);
    return detail::reduce4(acc);
}

double s_weighted_prob_sum(const cplx* amps, std::size_t dim, const double* w) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4)
        for (int j = 0; j < 4; ++j) {
            const double re = amps[i + j].real();
            const double im = amps[i + j].imag();
            acc[j] += (re * re + im * im) * w[i + j];
        }
    detail::weighted_tail(amps, w, i, dim, acc);
    return detail::reduce4(acc);
}

}  // namespace

namespace detail {

// Permutation only, no arithmetic; every backend shares this path.
void scalar_apply_cx(cplx* amps, int n_qubits, int control, int target) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & cb) && !(i & tb)) std::swap(amps[i], amps[i | tb]);
}

}  // namespace detail

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",       s_apply_1q, s_apply_2q,          s_apply_diag1,
        s_apply_parity_phase, detail::scalar_apply_cx, s_probabilities, s_norm_sq,
        s_weighted_prob_sum,
    };
    return table;
}

}  // namespace rlvqc::sim
