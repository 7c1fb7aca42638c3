#include "rlvqc/sim/statevector.hpp"

#include <stdexcept>

namespace rlvqc::sim {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 28) throw std::invalid_argument("n_qubits out of range");
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = cplx{1.0, 0.0};
}

double StateVector::norm_sq() const {
    return active_kernels().norm_sq(amps_.data(), amps_.size());
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    active_kernels().probabilities(amps_.data(), amps_.size(), out.data());
    return out;
}

double StateVector::weighted_prob_sum(std::span<const double> weights) const {
    if (weights.size() != amps_.size()) throw std::invalid_argument("weights size mismatch");
    return active_kernels().weighted_prob_sum(amps_.data(), amps_.size(), weights.data());
}

}  // namespace rlvqc::sim
