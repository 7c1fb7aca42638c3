#include "rlvqc/sim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace rlvqc::sim {

namespace {

const char* axis_letter(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

void check_qubits(const GateInstance& g, int n_qubits) {
    if (g.qubits[0] < 0 || g.qubits[0] >= n_qubits)
        throw std::out_of_range("gate qubit index out of range");
    if (g.arity() == 2) {
        if (g.qubits[1] < 0 || g.qubits[1] >= n_qubits)
            throw std::out_of_range("gate qubit index out of range");
        if (g.qubits[0] == g.qubits[1])
            throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
}

}  // namespace

GateInstance GateInstance::h(int q) { return {GateKind::H, Axis::Z, Axis::Z, {q, -1}, -1, 1.0}; }

GateInstance GateInstance::rot(Axis axis, int q, int slot, double coeff) {
    const GateKind kind =
        axis == Axis::X ? GateKind::Rx : (axis == Axis::Y ? GateKind::Ry : GateKind::Rz);
    return {kind, Axis::Z, Axis::Z, {q, -1}, slot, coeff};
}

GateInstance GateInstance::rot_fixed(Axis axis, int q, double angle) {
    return rot(axis, q, -1, angle);
}

GateInstance GateInstance::rzz(int q0, int q1, int slot, double coeff) {
    return {GateKind::Rzz, Axis::Z, Axis::Z, {q0, q1}, slot, coeff};
}

GateInstance GateInstance::rab(Axis a, Axis b, int q0, int q1, int slot) {
    if (a == Axis::Z && b == Axis::Z) return rzz(q0, q1, slot);
    return {GateKind::Rab, a, b, {q0, q1}, slot, 1.0};
}

GateInstance GateInstance::cx(int control, int target) {
    return {GateKind::CX, Axis::Z, Axis::Z, {control, target}, -1, 1.0};
}

std::string gate_name(const GateInstance& g) {
    switch (g.kind) {
        case GateKind::H: return "h";
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::Rzz: return "rzz";
        case GateKind::CX: return "cx";
        case GateKind::Rab:
            return std::string("r") + axis_letter(g.axis_a) + axis_letter(g.axis_b);
    }
    return "?";
}

std::array<cplx, 4> hadamard_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return {cplx{s, 0}, cplx{s, 0}, cplx{s, 0}, cplx{-s, 0}};
}

std::array<cplx, 4> rotation_matrix(Axis axis, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (axis) {
        case Axis::X: return {cplx{c, 0}, cplx{0, -s}, cplx{0, -s}, cplx{c, 0}};
        case Axis::Y: return {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0}};
        default: return {cplx{c, -s}, cplx{0, 0}, cplx{0, 0}, cplx{c, s}};
    }
}

std::array<cplx, 4> pauli_matrix(Axis axis) {
    switch (axis) {
        case Axis::X: return {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
        case Axis::Y: return {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}};
        default: return {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}};
    }
}

std::array<cplx, 16> rab_matrix(Axis a, Axis b, double theta) {
    const auto pa = pauli_matrix(a);
    const auto pb = pauli_matrix(b);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    std::array<cplx, 16> m{};
    for (int r0 = 0; r0 < 2; ++r0)
        for (int r1 = 0; r1 < 2; ++r1)
            for (int c0 = 0; c0 < 2; ++c0)
                for (int c1 = 0; c1 < 2; ++c1) {
                    const cplx p = pa[2 * r0 + c0] * pb[2 * r1 + c1];
                    cplx v = cplx{0, -s} * p;  // -i sin(theta/2) * P
                    if (r0 == c0 && r1 == c1) v += c;
                    m[4 * (2 * r0 + r1) + (2 * c0 + c1)] = v;
                }
    return m;
}

std::vector<GateInstance> decompose_rab(Axis a, Axis b, int param_slot, int q0, int q1,
                                        double coeff) {
    std::vector<GateInstance> out;
    const auto push_basis_change = [&](Axis axis, int q, bool adjoint) {
        if (axis == Axis::Z) return;  // U_z = I
        if (axis == Axis::X)
            out.push_back(GateInstance::h(q));  // self-adjoint
        else
            out.push_back(GateInstance::rot_fixed(Axis::X, q, adjoint ? -M_PI_2 : M_PI_2));
    };
    push_basis_change(a, q0, false);
    push_basis_change(b, q1, false);
    out.push_back(GateInstance::rzz(q0, q1, param_slot, coeff));
    push_basis_change(a, q0, true);
    push_basis_change(b, q1, true);
    return out;
}

void apply_gate(StateVector& state, const GateInstance& gate, double theta) {
    check_qubits(gate, state.n_qubits());
    const KernelTable& k = active_kernels();
    cplx* amps = state.amplitudes().data();
    const int n = state.n_qubits();
    switch (gate.kind) {
        case GateKind::H: {
            const auto m = hadamard_matrix();
            k.apply_1q(amps, n, gate.qubits[0], m.data());
            break;
        }
        case GateKind::Rx:
        case GateKind::Ry: {
            const auto m =
                rotation_matrix(gate.kind == GateKind::Rx ? Axis::X : Axis::Y, theta);
            k.apply_1q(amps, n, gate.qubits[0], m.data());
            break;
        }
        case GateKind::Rz: {
            const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
            k.apply_diag1(amps, n, gate.qubits[0], cplx{c, -s}, cplx{c, s});
            break;
        }
        case GateKind::Rzz: {
            const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
            k.apply_parity_phase(amps, n, gate.qubits[0], gate.qubits[1], cplx{c, -s},
                                 cplx{c, s});
            break;
        }
        case GateKind::Rab: {
            const auto m = rab_matrix(gate.axis_a, gate.axis_b, theta);
            k.apply_2q(amps, n, gate.qubits[0], gate.qubits[1], m.data());
            break;
        }
        case GateKind::CX:
            k.apply_cx(amps, n, gate.qubits[0], gate.qubits[1]);
            break;
    }
}

}  // namespace rlvqc::sim
