#pragma once

#include "rlvqc/problems/ising.hpp"
#include "rlvqc/rng.hpp"
#include "rlvqc/sim/circuit.hpp"

#include <span>
#include <vector>

namespace rlvqc::baseline {

// Layered baseline ansatz: a Hadamard layer, then p repetitions of the
// cost unitary (Rz(2 h_i gamma_l) on every qubit with h_i != 0, followed
// by Rzz(2 J_ij gamma_l) on every coupled pair) and the mixer
// (Rx(2 beta_l) on every qubit). Layer l shares parameter slot 2l for its
// cost gates and 2l+1 for its mixers, so the circuit carries exactly 2p
// parameters, all starting at zero (the uniform state). The Ising
// constant is a global phase and stays out of the circuit; measured
// energies include it via the instance's energy table.
sim::Circuit build_qaoa(const problems::QuboInstance& qubo, int p);

struct EstimateOptions {
    int n_runs = 1000;
    bool exact = false;
};

struct QaoaResult {
    std::vector<double> params;
    double estimate = 0.0;  // best evaluated objective value
    int evals_used = 0;
};

// Minimizes the energy estimate over the 2p shared parameters from the
// all-zeros start; returns the best point evaluated.
QaoaResult optimize_qaoa(const sim::Circuit& circuit, std::span<const double> energies,
                         int budget_evals, const EstimateOptions& options, Rng& rng);

}  // namespace rlvqc::baseline
