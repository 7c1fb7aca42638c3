#pragma once

#include "rlvqc/problems/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rlvqc::problems {

enum class ProblemTag { MaxCut, MinVertexCover, MaxClique };

const char* problem_name(ProblemTag tag);  // "maxcut", "mvc", "maxclique"
ProblemTag problem_from_name(std::string_view name);

// Upper-triangular QUBO with the diagonal holding the linear coefficients,
// plus a constant offset so penalty expansions keep their full value.
// All three builders store a minimization-form energy (lower is better).
struct QuboInstance {
    int n = 0;
    std::vector<double> q;  // row-major n*n, entries only at j >= i
    ProblemTag problem_tag = ProblemTag::MaxCut;
    double penalty = 0.0;  // 0 when unconstrained
    double offset = 0.0;

    double at(int i, int j) const { return q[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return q[static_cast<std::size_t>(i) * n + j]; }

    // x^T Q x + offset, bit k of `assignment` = x_k; O(n^2)
    double energy(std::uint64_t assignment) const;
    // same, from an MSB-first bitstring of length n
    double energy_of_bits(std::string_view bits) const;
};

QuboInstance maxcut_qubo(const Graph& g);
QuboInstance mvc_qubo(const Graph& g, double penalty);
QuboInstance maxclique_qubo(const Graph& g, double penalty);

// P = n + 1: exceeds the largest possible objective gain of any violation.
// Throws for MaxCut (unconstrained).
double default_penalty(const Graph& g, ProblemTag tag);

QuboInstance build_qubo(const Graph& g, ProblemTag tag);  // default penalty where needed

// Energies of all 2^n assignments, indexed by assignment bits.
std::vector<double> energy_table(const QuboInstance& qubo);

struct BruteForceResult {
    double min_energy = 0.0;
    std::uint64_t argmin = 0;  // smallest index on ties
    double max_energy = 0.0;
};

// Exhaustive enumeration; guarded to n <= 24.
BruteForceResult brute_force_extrema(const QuboInstance& qubo);

// Sparse triplet text: "n nnz problem penalty offset" header, then one
// "i j value" line per stored coefficient (hexfloat), bit-exact.
std::string qubo_to_text(const QuboInstance& qubo);
QuboInstance qubo_from_text(const std::string& text);

}  // namespace rlvqc::problems
