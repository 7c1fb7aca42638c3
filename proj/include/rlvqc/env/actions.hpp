#pragma once

#include "rlvqc/problems/qubo.hpp"
#include "rlvqc/sim/circuit.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rlvqc::env {

enum class EnvMode { Global, Block };

const char* mode_name(EnvMode mode);  // "global" / "block"

// One insertable gate. Global mode: q0/q1 are concrete qubit indices.
// Block mode: q0/q1 are block roles (0 and 1), instantiated per
// interacting pair.
struct ActionDescriptor {
    bool two_qubit = false;
    sim::Axis axis_a = sim::Axis::X;  // rotation axis for single-qubit gates
    sim::Axis axis_b = sim::Axis::X;  // second axis for two-qubit gates
    int q0 = 0;
    int q1 = 1;
    bool operator==(const ActionDescriptor&) const = default;
};

std::string action_name(const ActionDescriptor& a);

// Ordering is fixed: single-qubit rotations by axis (x, y, z) then qubit,
// two-qubit rotations by axis pair (xx, xy, ..., zz) then pair index.
// Global mode enumerates 3n + 9*n*(n-1)/2 actions over all qubit pairs;
// block mode enumerates the fixed 2-qubit set of 3*2 + 9 = 15.
struct ActionSpace {
    EnvMode mode = EnvMode::Block;
    int n_qubits = 0;
    std::vector<std::pair<int, int>> interacting_pairs;
    std::vector<ActionDescriptor> actions;
};

// Pairs (i, j), i < j, with a nonzero QUBO coupling.
std::vector<std::pair<int, int>> interacting_pairs(const problems::QuboInstance& qubo);

ActionSpace enumerate_actions(EnvMode mode, int n_qubits,
                              std::vector<std::pair<int, int>> pairs);

// One concrete gate per interacting pair for every abstract block gate,
// pairs in lexicographic order, grouped block-gate-major; every instance
// gets its own zero-initialized parameter. Role 0 maps to the pair's
// first qubit.
sim::Circuit instantiate_block(const std::vector<ActionDescriptor>& block_gates,
                               const std::vector<std::pair<int, int>>& pairs, int n_qubits);

}  // namespace rlvqc::env
