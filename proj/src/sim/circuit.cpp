#include "rlvqc/sim/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rlvqc::sim {

int Circuit::push_parameterized(GateInstance g, double value) {
    g.param_slot = static_cast<int>(params.size());
    params.push_back(value);
    gates.push_back(g);
    return g.param_slot;
}

void Circuit::validate() const {
    for (const GateInstance& g : gates) {
        if (g.qubits[0] < 0 || g.qubits[0] >= n_qubits)
            throw std::out_of_range("circuit gate qubit out of range");
        if (g.arity() == 2) {
            if (g.qubits[1] < 0 || g.qubits[1] >= n_qubits)
                throw std::out_of_range("circuit gate qubit out of range");
            if (g.qubits[0] == g.qubits[1])
                throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
        if (g.param_slot >= static_cast<int>(params.size()))
            throw std::out_of_range("gate parameter slot out of range");
        if (!g.parameterized() && g.param_slot >= 0)
            throw std::invalid_argument("H/CX cannot carry a parameter slot");
    }
}

Circuit Circuit::hadamard_layer(int n_qubits) {
    Circuit c;
    c.n_qubits = n_qubits;
    for (int q = 0; q < n_qubits; ++q) c.gates.push_back(GateInstance::h(q));
    return c;
}

StateVector simulate(const Circuit& circuit) {
    StateVector state(circuit.n_qubits);
    for (const GateInstance& g : circuit.gates) apply_gate(state, g, circuit.gate_angle(g));
    return state;
}

std::vector<double> exact_probabilities(const Circuit& circuit) {
    return simulate(circuit).probabilities();
}

std::vector<std::uint32_t> sample_counts(std::span<const double> probs, std::uint64_t n_runs,
                                         Rng& rng) {
    if (n_runs == 0) throw std::invalid_argument("n_runs must be >= 1");
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    std::vector<std::uint32_t> counts(probs.size(), 0);
    for (std::uint64_t s = 0; s < n_runs; ++s) {
        const double u = rng.uniform01() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(it - cdf.begin(), probs.size() - 1);
        ++counts[idx];
    }
    return counts;
}

std::map<std::string, std::uint64_t> run_shots(const Circuit& circuit, std::uint64_t n_runs,
                                               Rng& rng) {
    const auto probs = exact_probabilities(circuit);
    const auto counts = sample_counts(probs, n_runs, rng);
    std::map<std::string, std::uint64_t> hist;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) hist[bitstring(i, circuit.n_qubits)] = counts[i];
    return hist;
}

std::string bitstring(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int k = 0; k < n_qubits; ++k)
        if (index & (std::uint64_t{1} << k)) s[static_cast<std::size_t>(n_qubits - 1 - k)] = '1';
    return s;
}

std::uint64_t parse_bitstring(std::string_view bits) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[bits.size() - 1 - i];
        if (c == '1')
            index |= std::uint64_t{1} << i;
        else if (c != '0')
            throw std::invalid_argument("bitstring must contain only 0/1");
    }
    return index;
}

namespace {

struct BasisOp {
    GateKind kind;
    int q0;
    int q1;  // -1 for 1-qubit ops
};

// Expansion over the depth basis {H, Rx, Ry, Rz, Rzz}; CX passes through
// as a single two-wire gate.
void expand_depth_basis(const GateInstance& g, std::vector<BasisOp>& out) {
    if (g.kind == GateKind::Rab) {
        for (const GateInstance& d :
             decompose_rab(g.axis_a, g.axis_b, g.param_slot, g.qubits[0], g.qubits[1], g.coeff))
            out.push_back({d.kind, d.qubits[0], d.arity() == 2 ? d.qubits[1] : -1});
    } else {
        out.push_back({g.kind, g.qubits[0], g.arity() == 2 ? g.qubits[1] : -1});
    }
}

}  // namespace

int circuit_depth(const Circuit& circuit) {
    std::vector<int> level(static_cast<std::size_t>(circuit.n_qubits), 0);
    std::vector<BasisOp> ops;
    int depth = 0;
    for (const GateInstance& g : circuit.gates) {
        ops.clear();
        expand_depth_basis(g, ops);
        for (const BasisOp& op : ops) {
            int l = level[static_cast<std::size_t>(op.q0)];
            if (op.q1 >= 0) l = std::max(l, level[static_cast<std::size_t>(op.q1)]);
            ++l;
            level[static_cast<std::size_t>(op.q0)] = l;
            if (op.q1 >= 0) level[static_cast<std::size_t>(op.q1)] = l;
            depth = std::max(depth, l);
        }
    }
    return depth;
}

GateCensus gate_census(const Circuit& circuit) {
    GateCensus census;
    std::vector<BasisOp> ops;
    for (const GateInstance& g : circuit.gates) {
        ops.clear();
        expand_depth_basis(g, ops);
        for (const BasisOp& op : ops) switch (op.kind) {
                case GateKind::H: ++census.h; break;
                case GateKind::Rx: ++census.rx; break;
                case GateKind::Ry: ++census.ry; break;
                case GateKind::Rz: ++census.rz; break;
                case GateKind::CX: ++census.cx; break;
                case GateKind::Rzz:
                    census.cx += 2;  // CX - Rz - CX
                    census.rz += 1;
                    break;
                default: break;
            }
    }
    return census;
}

namespace {

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

Axis axis_from_letter(char c) {
    switch (c) {
        case 'x': return Axis::X;
        case 'y': return Axis::Y;
        case 'z': return Axis::Z;
        default: throw std::invalid_argument("bad axis letter in gate name");
    }
}

}  // namespace

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits << "\n";
    for (const GateInstance& g : circuit.gates) {
        out << gate_name(g) << ' ' << g.qubits[0];
        if (g.arity() == 2) out << ' ' << g.qubits[1];
        if (g.parameterized()) out << ' ' << hex_double(circuit.gate_angle(g));
        out << "\n";
    }
    return out.str();
}

Circuit circuit_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    if (!(in >> tok) || tok != "qubits") throw std::invalid_argument("missing circuit header");
    Circuit c;
    if (!(in >> c.n_qubits) || c.n_qubits < 1)
        throw std::invalid_argument("bad qubit count in circuit header");
    std::string name;
    while (in >> name) {
        GateInstance g;
        if (name == "h" || name == "cx") {
            g.kind = name == "h" ? GateKind::H : GateKind::CX;
        } else if (name == "rx" || name == "ry" || name == "rz") {
            g.kind = name == "rx" ? GateKind::Rx : (name == "ry" ? GateKind::Ry : GateKind::Rz);
        } else if (name == "rzz") {
            g.kind = GateKind::Rzz;
        } else if (name.size() == 3 && name[0] == 'r') {
            g.kind = GateKind::Rab;
            g.axis_a = axis_from_letter(name[1]);
            g.axis_b = axis_from_letter(name[2]);
        } else {
            throw std::invalid_argument("unknown gate name: " + name);
        }
        if (!(in >> g.qubits[0])) throw std::invalid_argument("missing qubit index");
        if (g.arity() == 2 && !(in >> g.qubits[1]))
            throw std::invalid_argument("missing second qubit index");
        if (g.parameterized()) {
            if (!(in >> tok)) throw std::invalid_argument("missing gate angle");
            const double angle = std::strtod(tok.c_str(), nullptr);
            c.push_parameterized(g, angle);
        } else {
            c.gates.push_back(g);
        }
    }
    c.validate();
    return c;
}

}  // namespace rlvqc::sim
