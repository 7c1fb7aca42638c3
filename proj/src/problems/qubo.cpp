#include "rlvqc/problems/qubo.hpp"

#include "rlvqc/sim/circuit.hpp"  // parse_bitstring

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rlvqc::problems {

const char* problem_name(ProblemTag tag) {
    switch (tag) {
        case ProblemTag::MaxCut: return "maxcut";
        case ProblemTag::MinVertexCover: return "mvc";
        default: return "maxclique";
    }
}

ProblemTag problem_from_name(std::string_view name) {
    if (name == "maxcut") return ProblemTag::MaxCut;
    if (name == "mvc") return ProblemTag::MinVertexCover;
    if (name == "maxclique") return ProblemTag::MaxClique;
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

double QuboInstance::energy(std::uint64_t assignment) const {
    double e = offset;
    for (int i = 0; i < n; ++i) {
        if (!(assignment & (std::uint64_t{1} << i))) continue;
        e += at(i, i);
        for (int j = i + 1; j < n; ++j)
            if (assignment & (std::uint64_t{1} << j)) e += at(i, j);
    }
    return e;
}

double QuboInstance::energy_of_bits(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("bitstring length must equal n");
    return energy(sim::parse_bitstring(bits));
}

namespace {

QuboInstance blank(int n, ProblemTag tag, double penalty) {
    QuboInstance q;
    q.n = n;
    q.q.assign(static_cast<std::size_t>(n) * n, 0.0);
    q.problem_tag = tag;
    q.penalty = penalty;
    return q;
}

}  // namespace

// cut maximization stored as its negation: -sum_(i,j) (x_i + x_j - 2 x_i x_j)
QuboInstance maxcut_qubo(const Graph& g) {
    QuboInstance q = blank(g.n, ProblemTag::MaxCut, 0.0);
    for (const auto& [u, v] : g.edges) {
        q.at(u, u) -= 1.0;
        q.at(v, v) -= 1.0;
        q.at(u, v) += 2.0;
    }
    return q;
}

// sum_i x_i + P sum_(i,j) (1 - x_i - x_j + x_i x_j)
QuboInstance mvc_qubo(const Graph& g, double penalty) {
    if (penalty <= 0.0) throw std::invalid_argument("penalty must be positive");
    QuboInstance q = blank(g.n, ProblemTag::MinVertexCover, penalty);
    for (int i = 0; i < g.n; ++i) q.at(i, i) += 1.0;
    for (const auto& [u, v] : g.edges) {
        q.offset += penalty;
        q.at(u, u) -= penalty;
        q.at(v, v) -= penalty;
        q.at(u, v) += penalty;
    }
    return q;
}

// -sum_i x_i + P sum_(i,j) in non-edges x_i x_j
QuboInstance maxclique_qubo(const Graph& g, double penalty) {
    if (penalty <= 0.0) throw std::invalid_argument("penalty must be positive");
    QuboInstance q = blank(g.n, ProblemTag::MaxClique, penalty);
    for (int i = 0; i < g.n; ++i) q.at(i, i) -= 1.0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) q.at(u, v) += penalty;
    return q;
}

double default_penalty(const Graph& g, ProblemTag tag) {
    if (tag == ProblemTag::MaxCut)
        throw std::invalid_argument("maxcut carries no penalty term");
    return static_cast<double>(g.n) + 1.0;
}

QuboInstance build_qubo(const Graph& g, ProblemTag tag) {
    switch (tag) {
        case ProblemTag::MaxCut: return maxcut_qubo(g);
        case ProblemTag::MinVertexCover: return mvc_qubo(g, default_penalty(g, tag));
        default: return maxclique_qubo(g, default_penalty(g, tag));
    }
}

std::vector<double> energy_table(const QuboInstance& qubo) {
    if (qubo.n > 24) throw std::invalid_argument("energy table guarded to n <= 24");
    const std::size_t dim = std::size_t{1} << qubo.n;
    std::vector<double> table(dim);
    for (std::size_t x = 0; x < dim; ++x) table[x] = qubo.energy(x);
    return table;
}

BruteForceResult brute_force_extrema(const QuboInstance& qubo) {
    if (qubo.n > 24) throw std::invalid_argument("brute force guarded to n <= 24");
    BruteForceResult r;
    r.min_energy = r.max_energy = qubo.energy(0);
    r.argmin = 0;
    const std::uint64_t dim = std::uint64_t{1} << qubo.n;
    for (std::uint64_t x = 1; x < dim; ++x) {
        const double e = qubo.energy(x);
        if (e < r.min_energy) {
            r.min_energy = e;
            r.argmin = x;
        }
        if (e > r.max_energy) r.max_energy = e;
    }
    return r;
}

namespace {

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

}  // namespace

std::string qubo_to_text(const QuboInstance& qubo) {
    std::ostringstream out;
    std::size_t nnz = 0;
    for (double v : qubo.q)
        if (v != 0.0) ++nnz;
    out << qubo.n << ' ' << nnz << ' ' << problem_name(qubo.problem_tag) << ' '
        << hex_double(qubo.penalty) << ' ' << hex_double(qubo.offset) << "\n";
    for (int i = 0; i < qubo.n; ++i)
        for (int j = i; j < qubo.n; ++j)
            if (qubo.at(i, j) != 0.0)
                out << i << ' ' << j << ' ' << hex_double(qubo.at(i, j)) << "\n";
    return out.str();
}

QuboInstance qubo_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    std::size_t nnz = 0;
    std::string problem, penalty_tok, offset_tok;
    if (!(in >> n >> nnz >> problem >> penalty_tok >> offset_tok))
        throw std::invalid_argument("bad qubo header");
    QuboInstance q = blank(n, problem_from_name(problem), 0.0);
    q.penalty = std::strtod(penalty_tok.c_str(), nullptr);
    q.offset = std::strtod(offset_tok.c_str(), nullptr);
    for (std::size_t k = 0; k < nnz; ++k) {
        int i, j;
        std::string value;
        if (!(in >> i >> j >> value)) throw std::invalid_argument("truncated qubo triplets");
        if (i < 0 || j < i || j >= n) throw std::invalid_argument("triplet index out of range");
        q.at(i, j) = std::strtod(value.c_str(), nullptr);
    }
    return q;
}

}  // namespace rlvqc::problems
