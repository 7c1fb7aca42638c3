#include "rlvqc/baseline/qaoa.hpp"

#include "rlvqc/env/environment.hpp"
#include "rlvqc/optim/nelder_mead.hpp"

#include <stdexcept>

namespace rlvqc::baseline {

sim::Circuit build_qaoa(const problems::QuboInstance& qubo, int p) {
    if (p < 1) throw std::invalid_argument("layer depth must be >= 1");
    const problems::IsingHamiltonian ising = problems::qubo_to_ising(qubo);
    sim::Circuit circuit = sim::Circuit::hadamard_layer(qubo.n);
    circuit.params.assign(static_cast<std::size_t>(2 * p), 0.0);
    for (int layer = 0; layer < p; ++layer) {
        const int gamma_slot = 2 * layer;
        const int beta_slot = 2 * layer + 1;
        for (int i = 0; i < qubo.n; ++i)
            if (ising.h[static_cast<std::size_t>(i)] != 0.0)
                circuit.gates.push_back(sim::GateInstance::rot(
                    sim::Axis::Z, i, gamma_slot, 2.0 * ising.h[static_cast<std::size_t>(i)]));
        for (const auto& [pair, coupling] : ising.j)
            circuit.gates.push_back(
                sim::GateInstance::rzz(pair.first, pair.second, gamma_slot, 2.0 * coupling));
        for (int q = 0; q < qubo.n; ++q)
            circuit.gates.push_back(sim::GateInstance::rot(sim::Axis::X, q, beta_slot, 2.0));
    }
    return circuit;
}

QaoaResult optimize_qaoa(const sim::Circuit& circuit, std::span<const double> energies,
                         int budget_evals, const EstimateOptions& options, Rng& rng) {
    sim::Circuit work = circuit;
    const auto objective = [&](const std::vector<double>& theta) {
        work.params = theta;
        if (options.exact) return env::exact_expectation(work, energies);
        return env::estimate_expectation(work, energies, options.n_runs, rng);
    };
    const std::vector<double> x0(circuit.params.size(), 0.0);
    const auto result = optim::minimize(objective, x0, {budget_evals, 0.5, 1e-8});
    return {result.x_best, result.f_best, result.evals_used};
}

}  // namespace rlvqc::baseline
