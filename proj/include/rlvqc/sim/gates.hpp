#pragma once

#include "rlvqc/sim/statevector.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rlvqc::sim {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

enum class GateKind : std::uint8_t { H, Rx, Ry, Rz, Rzz, Rab, CX };

// One gate in a circuit. Rotation gates resolve their angle as
// coeff * params[param_slot]; a slotless rotation (param_slot < 0) is a
// fixed-angle gate whose angle is coeff itself (used by basis-change
// rewrites and by parsing). H and CX never carry a slot.
// Rab is a two-qubit rotation exp(-i theta/2 sigma_a (x) sigma_b) with
// sigma_a acting on qubits[0] and sigma_b on qubits[1]; the (z, z) axis
// pair is always normalized to the Rzz kind.
struct GateInstance {
    GateKind kind = GateKind::H;
    Axis axis_a = Axis::Z;  // Rab only
    Axis axis_b = Axis::Z;  // Rab only
    std::array<int, 2> qubits{0, -1};
    int param_slot = -1;
    double coeff = 1.0;

    static GateInstance h(int q);
    static GateInstance rot(Axis axis, int q, int slot, double coeff = 1.0);
    static GateInstance rot_fixed(Axis axis, int q, double angle);
    static GateInstance rzz(int q0, int q1, int slot, double coeff = 1.0);
    static GateInstance rab(Axis a, Axis b, int q0, int q1, int slot);
    static GateInstance cx(int control, int target);

    bool parameterized() const {
        return kind != GateKind::H && kind != GateKind::CX;
    }
    int arity() const {
        return (kind == GateKind::Rzz || kind == GateKind::Rab || kind == GateKind::CX) ? 2 : 1;
    }
    bool operator==(const GateInstance&) const = default;
};

// "h", "rx", "ry", "rz", "rzz", "rxy", ..., "cx"
std::string gate_name(const GateInstance& g);

std::array<cplx, 4> hadamard_matrix();
std::array<cplx, 4> rotation_matrix(Axis axis, double theta);
std::array<cplx, 4> pauli_matrix(Axis axis);

// exp(-i theta/2 sigma_a (x) sigma_b), 4x4 row-major over
// local index bit(role0)*2 + bit(role1)
std::array<cplx, 16> rab_matrix(Axis a, Axis b, double theta);

// Rewrites R_ab into basis changes around Rzz:
//   U_a on role 0, U_b on role 1, Rzz(slot), then the adjoints,
// with U_x = H, U_y = Rx(pi/2), U_z omitted. The composite is exactly
// equal to rab_matrix (no residual global phase). Role qubits are 0 and 1
// unless q0/q1 are given.
std::vector<GateInstance> decompose_rab(Axis a, Axis b, int param_slot, int q0 = 0, int q1 = 1,
                                        double coeff = 1.0);

// Applies one gate in place. theta is the resolved angle (ignored for H
// and CX). Throws std::out_of_range / std::invalid_argument on bad qubit
// indices. Norm is preserved to ~1e-15 per gate.
void apply_gate(StateVector& state, const GateInstance& gate, double theta);

}  // namespace rlvqc::sim
