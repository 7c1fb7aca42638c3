#include "rlvqc/env/actions.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlvqc::env {

namespace {

const char* axis_letter(sim::Axis a) {
    switch (a) {
        case sim::Axis::X: return "x";
        case sim::Axis::Y: return "y";
        default: return "z";
    }
}

}  // namespace

const char* mode_name(EnvMode mode) { return mode == EnvMode::Global ? "global" : "block"; }

std::string action_name(const ActionDescriptor& a) {
    std::string s = "r";
    s += axis_letter(a.axis_a);
    if (a.two_qubit) s += axis_letter(a.axis_b);
    s += ' ';
    s += std::to_string(a.q0);
    if (a.two_qubit) {
        s += ' ';
        s += std::to_string(a.q1);
    }
    return s;
}

std::vector<std::pair<int, int>> interacting_pairs(const problems::QuboInstance& qubo) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < qubo.n; ++i)
        for (int j = i + 1; j < qubo.n; ++j)
            if (qubo.at(i, j) != 0.0) pairs.emplace_back(i, j);
    return pairs;
}

ActionSpace enumerate_actions(EnvMode mode, int n_qubits,
                              std::vector<std::pair<int, int>> pairs) {
    ActionSpace space;
    space.mode = mode;
    space.n_qubits = n_qubits;
    std::sort(pairs.begin(), pairs.end());
    space.interacting_pairs = std::move(pairs);

    constexpr sim::Axis kAxes[3] = {sim::Axis::X, sim::Axis::Y, sim::Axis::Z};
    if (mode == EnvMode::Global) {
        if (n_qubits < 2) throw std::invalid_argument("global mode needs n >= 2");
        for (sim::Axis axis : kAxes)
            for (int q = 0; q < n_qubits; ++q)
                space.actions.push_back({false, axis, axis, q, -1});
        for (sim::Axis a : kAxes)
            for (sim::Axis b : kAxes)
                for (int i = 0; i < n_qubits; ++i)
                    for (int j = i + 1; j < n_qubits; ++j)
                        space.actions.push_back({true, a, b, i, j});
    } else {
        if (space.interacting_pairs.empty())
            throw std::invalid_argument("block mode needs interacting pairs");
        for (sim::Axis axis : kAxes)
            for (int role = 0; role < 2; ++role)
                space.actions.push_back({false, axis, axis, role, -1});
        for (sim::Axis a : kAxes)
            for (sim::Axis b : kAxes) space.actions.push_back({true, a, b, 0, 1});
    }
    return space;
}

sim::Circuit instantiate_block(const std::vector<ActionDescriptor>& block_gates,
                               const std::vector<std::pair<int, int>>& pairs, int n_qubits) {
    if (pairs.empty()) throw std::invalid_argument("block instantiation needs pairs");
    sim::Circuit circuit;
    circuit.n_qubits = n_qubits;
    for (const ActionDescriptor& g : block_gates)
        for (const auto& [i, j] : pairs) {
            if (g.two_qubit)
                circuit.push_parameterized(sim::GateInstance::rab(g.axis_a, g.axis_b, i, j, 0),
                                           0.0);
            else
                circuit.push_parameterized(
                    sim::GateInstance::rot(g.axis_a, g.q0 == 0 ? i : j, 0), 0.0);
        }
    return circuit;
}

}  // namespace rlvqc::env
