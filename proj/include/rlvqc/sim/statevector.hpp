#pragma once

#include "rlvqc/sim/kernels.hpp"

#include <span>
#include <vector>

namespace rlvqc::sim {

// n-qubit register of 2^n complex amplitudes, initialized to |0...0>.
// Basis index i stores qubit k in bit k. Instances are independent; it is
// safe to evolve distinct StateVectors on different threads.
class StateVector {
  public:
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    double norm_sq() const;
    std::vector<double> probabilities() const;

    // sum_i |c_i|^2 * weights[i]; weights.size() must equal dim()
    double weighted_prob_sum(std::span<const double> weights) const;

  private:
    int n_;
    std::vector<cplx> amps_;
};

}  // namespace rlvqc::sim
