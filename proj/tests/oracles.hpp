#pragma once

// Test-only dense-matrix machinery. Deliberately independent of the
// stride-indexed amplitude kernels it cross-checks: gates are lifted to
// full 2^n x 2^n matrices and composed by plain matrix products, and the
// two-qubit rotations come from a Taylor-series matrix exponential.

#include "rlvqc/sim/circuit.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using rlvqc::sim::cplx;

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<cplx> a;  // row-major

    static DenseMatrix zero(std::size_t d) { return {d, std::vector<cplx>(d * d)}; }
    static DenseMatrix identity(std::size_t d) {
        DenseMatrix m = zero(d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    cplx at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline DenseMatrix mul(const DenseMatrix& x, const DenseMatrix& y) {
    assert(x.dim == y.dim);
    DenseMatrix out = DenseMatrix::zero(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k) {
            const cplx v = x.at(i, k);
            if (v == cplx{}) continue;
            for (std::size_t j = 0; j < x.dim; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

inline DenseMatrix from_2x2(const std::array<cplx, 4>& u) {
    return {2, std::vector<cplx>(u.begin(), u.end())};
}

inline DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix out = DenseMatrix::zero(x.dim * y.dim);
    for (std::size_t r0 = 0; r0 < x.dim; ++r0)
        for (std::size_t c0 = 0; c0 < x.dim; ++c0)
            for (std::size_t r1 = 0; r1 < y.dim; ++r1)
                for (std::size_t c1 = 0; c1 < y.dim; ++c1)
                    out.at(r0 * y.dim + r1, c0 * y.dim + c1) = x.at(r0, c0) * y.at(r1, c1);
    return out;
}

inline double max_abs(const DenseMatrix& m) {
    double v = 0.0;
    for (const cplx& e : m.a) v = std::max(v, std::abs(e));
    return v;
}

// exp(A) by scaling-and-squaring with a plain Taylor series.
inline DenseMatrix expm(const DenseMatrix& m) {
    int scale = 0;
    double norm = max_abs(m) * static_cast<double>(m.dim);
    while (norm > 0.5 && scale < 40) {
        norm /= 2.0;
        ++scale;
    }
    DenseMatrix scaled = m;
    const double f = std::ldexp(1.0, -scale);
    for (cplx& e : scaled.a) e *= f;

    DenseMatrix sum = DenseMatrix::identity(m.dim);
    DenseMatrix term = DenseMatrix::identity(m.dim);
    for (int k = 1; k <= 24; ++k) {
        term = mul(term, scaled);
        for (cplx& e : term.a) e /= static_cast<double>(k);
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
    }
    for (int s = 0; s < scale; ++s) sum = mul(sum, sum);
    return sum;
}

// Lifts a 1-qubit matrix to n qubits (basis index bit k = qubit k).
inline DenseMatrix embed_1q(const std::array<cplx, 4>& u, int target, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bit = std::size_t{1} << target;
    DenseMatrix out = DenseMatrix::zero(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (int br = 0; br < 2; ++br) {
            const std::size_t r = (i & ~bit) | (br ? bit : 0);
            const int bc = (i & bit) ? 1 : 0;
            out.at(r, i) += u[2 * br + bc];
        }
    return out;
}

// Lifts a 4x4 matrix (local index bit(q0)*2 + bit(q1)) to n qubits.
inline DenseMatrix embed_2q(const std::array<cplx, 16>& u, int q0, int q1, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    DenseMatrix out = DenseMatrix::zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const int lc = ((i & b0) ? 2 : 0) + ((i & b1) ? 1 : 0);
        for (int lr = 0; lr < 4; ++lr) {
            const std::size_t r = (i & ~(b0 | b1)) | ((lr & 2) ? b0 : 0) | ((lr & 1) ? b1 : 0);
            out.at(r, i) += u[4 * lr + lc];
        }
    }
    return out;
}

inline DenseMatrix gate_unitary(const rlvqc::sim::GateInstance& g, double theta, int n) {
    using rlvqc::sim::Axis;
    using rlvqc::sim::GateKind;
    switch (g.kind) {
        case GateKind::H: return embed_1q(rlvqc::sim::hadamard_matrix(), g.qubits[0], n);
        case GateKind::Rx: return embed_1q(rlvqc::sim::rotation_matrix(Axis::X, theta), g.qubits[0], n);
        case GateKind::Ry: return embed_1q(rlvqc::sim::rotation_matrix(Axis::Y, theta), g.qubits[0], n);
        case GateKind::Rz: return embed_1q(rlvqc::sim::rotation_matrix(Axis::Z, theta), g.qubits[0], n);
        case GateKind::Rzz:
        case GateKind::Rab: {
            // exp(-i theta/2 sigma_a (x) sigma_b) via the Taylor oracle,
            // not the closed form used by the simulator
            const Axis aa = g.kind == GateKind::Rzz ? Axis::Z : g.axis_a;
            const Axis ab = g.kind == GateKind::Rzz ? Axis::Z : g.axis_b;
            DenseMatrix p = kron(from_2x2(rlvqc::sim::pauli_matrix(aa)),
                                 from_2x2(rlvqc::sim::pauli_matrix(ab)));
            for (cplx& e : p.a) e *= cplx{0.0, -theta / 2.0};
            const DenseMatrix u = expm(p);
            std::array<cplx, 16> m{};
            std::copy(u.a.begin(), u.a.end(), m.begin());
            return embed_2q(m, g.qubits[0], g.qubits[1], n);
        }
        case GateKind::CX: {
            std::array<cplx, 16> m{};  // control = local bit 1 (qubits[0])
            m[0 * 4 + 0] = 1;
            m[1 * 4 + 1] = 1;
            m[2 * 4 + 3] = 1;
            m[3 * 4 + 2] = 1;
            return embed_2q(m, g.qubits[0], g.qubits[1], n);
        }
    }
    return DenseMatrix::identity(std::size_t{1} << n);
}

inline DenseMatrix circuit_unitary(const rlvqc::sim::Circuit& c) {
    DenseMatrix u = DenseMatrix::identity(std::size_t{1} << c.n_qubits);
    for (const auto& g : c.gates) u = mul(gate_unitary(g, c.gate_angle(g), c.n_qubits), u);
    return u;
}

// Entrywise comparison after aligning global phase on the largest entry.
inline double max_diff_up_to_phase(const DenseMatrix& x, const DenseMatrix& y) {
    assert(x.dim == y.dim);
    std::size_t ref = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (std::abs(x.a[i]) > std::abs(x.a[ref])) ref = i;
    if (std::abs(x.a[ref]) < 1e-14) return max_abs(y);
    const cplx phase = y.a[ref] / x.a[ref];
    double worst = std::abs(std::abs(phase) - 1.0);
    for (std::size_t i = 0; i < x.a.size(); ++i)
        worst = std::max(worst, std::abs(y.a[i] - phase * x.a[i]));
    return worst;
}

// Longest path through the explicit gate-dependency DAG; an independent
// check of the per-wire level tracker in circuit_depth.
inline int longest_path_depth(const std::vector<std::vector<int>>& gate_wires) {
    const int m = static_cast<int>(gate_wires.size());
    std::vector<int> best(static_cast<std::size_t>(m), 1);
    for (int v = 0; v < m; ++v)
        for (int u = v - 1; u >= 0; --u) {
            bool shares = false;
            for (int w : gate_wires[static_cast<std::size_t>(u)])
                for (int x : gate_wires[static_cast<std::size_t>(v)])
                    if (w == x) shares = true;
            if (shares)
                best[static_cast<std::size_t>(v)] =
                    std::max(best[static_cast<std::size_t>(v)], best[static_cast<std::size_t>(u)] + 1);
        }
    int depth = 0;
    for (int b : best) depth = std::max(depth, b);
    return m == 0 ? 0 : depth;
}

}  // namespace oracle
