#pragma once

#include "rlvqc/problems/qubo.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rlvqc::problems {

// Spin form of a QUBO under x_i = (1 - z_i)/2 (z = +1 <-> x = 0):
// E(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + c, and E agrees with the
// source QUBO on every assignment.
struct IsingHamiltonian {
    std::vector<double> h;
    std::map<std::pair<int, int>, double> j;  // keys (i, j) with i < j, nonzero only
    double c = 0.0;

    double energy(const std::vector<int>& spins) const;
    // spins implied by assignment bits: bit k set -> z_k = -1
    double energy_of_assignment(std::uint64_t assignment) const;
};

IsingHamiltonian qubo_to_ising(const QuboInstance& qubo);

}  // namespace rlvqc::problems
