#pragma once

#include "rlvqc/rng.hpp"
#include "rlvqc/sim/gates.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rlvqc::sim {

// Ordered gate list over n qubits plus the shared parameter vector the
// gates' param_slots index into. Setting all params to zero turns every
// rotation gate into the identity.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateInstance> gates;
    std::vector<double> params;

    double gate_angle(const GateInstance& g) const {
        return g.param_slot >= 0 ? g.coeff * params[static_cast<std::size_t>(g.param_slot)]
                                 : g.coeff;
    }

    // Appends a rotation gate with a fresh parameter slot; returns the slot.
    int push_parameterized(GateInstance g, double value);

    // Throws if any gate references an invalid qubit or parameter slot.
    void validate() const;

    static Circuit hadamard_layer(int n_qubits);
};

StateVector simulate(const Circuit& circuit);

std::vector<double> exact_probabilities(const Circuit& circuit);

// Multinomial draw of n_runs basis-state indices from probs (need not be
// normalized beyond rounding error); returns dense per-index counts.
std::vector<std::uint32_t> sample_counts(std::span<const double> probs, std::uint64_t n_runs,
                                         Rng& rng);

// Shot histogram keyed by bitstring (qubit 0 is the rightmost character);
// zero-count entries are omitted. Throws on n_runs == 0.
std::map<std::string, std::uint64_t> run_shots(const Circuit& circuit, std::uint64_t n_runs,
                                               Rng& rng);

// MSB-first rendering of a basis index, n characters.
std::string bitstring(std::uint64_t index, int n_qubits);
std::uint64_t parse_bitstring(std::string_view bits);

// Longest dependency chain with the circuit rewritten over
// {H, Rx, Ry, Rz, Rzz}: R_ab becomes basis changes + Rzz (identity basis
// changes dropped), CX counts as one gate. Empty circuit -> 0.
int circuit_depth(const Circuit& circuit);

// Gate counts over {H, Rx, Ry, Rz, CX}: R_ab expands to basis changes
// around Rzz, then every Rzz becomes CX-Rz-CX. No simplification.
struct GateCensus {
    std::int64_t h = 0, rx = 0, ry = 0, rz = 0, cx = 0;
    std::int64_t total() const { return h + rx + ry + rz + cx; }
    bool operator==(const GateCensus&) const = default;
};
GateCensus gate_census(const Circuit& circuit);

// Line-oriented text form: "qubits <n>" header, then one record per gate
// (name, qubit indices, resolved angle in hexfloat). Parsing assigns each
// rotation gate a fresh parameter slot. Round-trips bit-exactly.
std::string to_text(const Circuit& circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace rlvqc::sim
