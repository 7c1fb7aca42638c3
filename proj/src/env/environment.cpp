#include "rlvqc/env/environment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rlvqc::env {

int max_episode_steps(EnvMode mode, int n_qubits) {
    return mode == EnvMode::Global ? 2 * n_qubits : 5;
}

double resolve_beta(EnvMode mode, std::size_t n_pairs, double base) {
    return mode == EnvMode::Block ? base / static_cast<double>(n_pairs) : base;
}

namespace {

double shot_estimate(std::span<const double> probs, std::span<const double> energies,
                     int n_runs, Rng& rng) {
    const auto counts = sim::sample_counts(probs, static_cast<std::uint64_t>(n_runs), rng);
    double sum = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) sum += static_cast<double>(counts[i]) * energies[i];
    return sum / static_cast<double>(n_runs);
}

}  // namespace

double estimate_expectation(const sim::Circuit& circuit, std::span<const double> energies,
                            int n_runs, Rng& rng) {
    if (n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
    return shot_estimate(sim::exact_probabilities(circuit), energies, n_runs, rng);
}

double exact_expectation(const sim::Circuit& circuit, std::span<const double> energies) {
    return sim::simulate(circuit).weighted_prob_sum(energies);
}

CircuitEnv::CircuitEnv(problems::QuboInstance instance, EnvConfig config,
                       std::uint64_t shot_seed)
    : instance_(std::move(instance)),
      config_(config),
      space_(enumerate_actions(config.mode, instance_.n, interacting_pairs(instance_))),
      energies_(problems::energy_table(instance_)),
      rng_(shot_seed),
      circuit_(sim::Circuit::hadamard_layer(instance_.n)) {
    if (config_.n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
    if (config_.patience_init < 1) throw std::invalid_argument("patience_init must be >= 1");
    if (config_.max_ep_len < 1) throw std::invalid_argument("max_ep_len must be >= 1");
}

std::vector<double> CircuitEnv::observe() {
    const auto probs = sim::exact_probabilities(circuit_);
    if (config_.exact_expectation) return probs;
    const auto counts =
        sim::sample_counts(probs, static_cast<std::uint64_t>(config_.n_runs), rng_);
    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(config_.n_runs);
    return freq;
}

double CircuitEnv::objective_estimate(const sim::StateVector& state) {
    if (config_.exact_expectation) return state.weighted_prob_sum(energies_);
    return shot_estimate(state.probabilities(), energies_, config_.n_runs, rng_);
}

std::vector<double> CircuitEnv::reset() {
    circuit_ = sim::Circuit::hadamard_layer(instance_.n);
    block_gates_.clear();
    best_episode_reward_ = -std::numeric_limits<double>::infinity();
    patience_ = config_.patience_init;
    step_count_ = 0;
    ++episode_;
    terminal_ = false;
    return observe();
}

agent::EnvInterface::Step CircuitEnv::step(int action) {
    if (terminal_) throw std::logic_error("step() on a terminal episode; call reset()");
    if (action < 0 || action >= action_count())
        throw std::out_of_range("action index out of range");
    const ActionDescriptor& desc = space_.actions[static_cast<std::size_t>(action)];

    // append the action's gate(s) at angle zero
    std::size_t first_new_param = circuit_.params.size();
    if (config_.mode == EnvMode::Global) {
        if (desc.two_qubit)
            circuit_.push_parameterized(
                sim::GateInstance::rab(desc.axis_a, desc.axis_b, desc.q0, desc.q1, 0), 0.0);
        else
            circuit_.push_parameterized(sim::GateInstance::rot(desc.axis_a, desc.q0, 0), 0.0);
    } else {
        block_gates_.push_back(desc);
        sim::Circuit body = instantiate_block(block_gates_, space_.interacting_pairs,
                                              instance_.n);
        sim::Circuit rebuilt = sim::Circuit::hadamard_layer(instance_.n);
        rebuilt.gates.insert(rebuilt.gates.end(), body.gates.begin(), body.gates.end());
        rebuilt.params = std::move(body.params);
        // earlier block gates keep their tuned values
        std::copy(circuit_.params.begin(), circuit_.params.end(), rebuilt.params.begin());
        circuit_ = std::move(rebuilt);
    }

    // inner optimization over the newly added parameters (all parameters
    // when the full-refit switch is on)
    const std::size_t n_params = circuit_.params.size();
    const std::size_t opt_begin = config_.optimize_all_params ? 0 : first_new_param;
    const std::size_t n_opt = n_params - opt_begin;

    // the prefix state ahead of the tuned gates is fixed; cache it
    std::size_t first_tuned_gate = circuit_.gates.size();
    for (std::size_t g = 0; g < circuit_.gates.size(); ++g)
        if (circuit_.gates[g].param_slot >= static_cast<int>(opt_begin)) {
            first_tuned_gate = g;
            break;
        }
    sim::StateVector prefix(instance_.n);
    for (std::size_t g = 0; g < first_tuned_gate; ++g)
        sim::apply_gate(prefix, circuit_.gates[g], circuit_.gate_angle(circuit_.gates[g]));
    const auto objective = [&](const std::vector<double>& theta) {
        for (std::size_t k = 0; k < n_opt; ++k) circuit_.params[opt_begin + k] = theta[k];
        sim::StateVector st = prefix;
        for (std::size_t g = first_tuned_gate; g < circuit_.gates.size(); ++g)
            sim::apply_gate(st, circuit_.gates[g], circuit_.gate_angle(circuit_.gates[g]));
        return objective_estimate(st);
    };
    std::vector<double> x0(n_opt, 0.0);
    if (config_.optimize_all_params)
        x0.assign(circuit_.params.begin() + static_cast<std::ptrdiff_t>(opt_begin),
                  circuit_.params.end());
    const auto result = optim::minimize(
        objective, x0, {config_.inner_opt_evals, config_.inner_initial_step, 1e-8});
    for (std::size_t k = 0; k < n_opt; ++k) circuit_.params[opt_begin + k] = result.x_best[k];

    const int depth = sim::circuit_depth(circuit_);
    const double reward = -result.f_best - config_.beta * depth;
    patience_ += reward < best_episode_reward_ ? -1 : 1;
    patience_ = std::clamp(patience_, 0, config_.patience_init);
    best_episode_reward_ = std::max(best_episode_reward_, reward);
    ++step_count_;
    ++total_steps_;
    const bool done = patience_ == 0 || step_count_ >= config_.max_ep_len;
    terminal_ = done;

    history_.push_back({circuit_, reward, result.f_best, episode_, step_count_});
    traces_.push_back({total_steps_, episode_, step_count_, action, reward, result.f_best,
                       depth, patience_, done});

    Step out;
    out.obs = observe();
    out.reward = reward;
    out.done = done;
    return out;
}

FinalizeResult finalize(const std::vector<HistoryEntry>& history,
                        std::span<const double> energies, const EnvConfig& config,
                        int budget_evals, Rng& rng) {
    if (history.empty()) throw std::invalid_argument("finalize needs a non-empty history");
    std::size_t best = 0;
    for (std::size_t i = 1; i < history.size(); ++i)
        if (history[i].reward > history[best].reward) best = i;  // earliest wins ties

    FinalizeResult result;
    result.history_index = best;
    result.circuit = history[best].circuit;
    result.pre_tune_estimate = history[best].expectation;

    sim::Circuit& circuit = result.circuit;
    const auto objective = [&](const std::vector<double>& theta) {
        circuit.params = theta;
        if (config.exact_expectation) return exact_expectation(circuit, energies);
        return estimate_expectation(circuit, energies, config.n_runs, rng);
    };
    const auto tuned = optim::minimize(objective, circuit.params,
                                       {budget_evals, config.inner_initial_step, 1e-8});
    circuit.params = tuned.x_best;
    result.estimate = tuned.f_best;
    return result;
}

}  // namespace rlvqc::env
