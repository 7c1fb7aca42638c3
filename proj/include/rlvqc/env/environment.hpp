#pragma once

#include "rlvqc/agent/ppo.hpp"
#include "rlvqc/env/actions.hpp"
#include "rlvqc/optim/nelder_mead.hpp"
#include "rlvqc/problems/qubo.hpp"
#include "rlvqc/sim/circuit.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rlvqc::env {

struct EnvConfig {
    EnvMode mode = EnvMode::Block;
    double beta = 0.1;  // depth penalty; block runs scale it by 1/|pairs|
    int n_runs = 1000;
    bool exact_expectation = false;  // bypass shot sampling (testing/fine checks)
    int inner_opt_evals = 50;
    int patience_init = 3;
    int max_ep_len = 5;
    bool optimize_all_params = false;  // refit every parameter at each step
    double inner_initial_step = 0.5;
};

// Episode step cap: the global variant matches the gate budget of a
// depth-1 layered baseline (2n), the block variant a depth-5 one.
int max_episode_steps(EnvMode mode, int n_qubits);

// 0.1, divided by the interacting-pair count in block mode so each action
// contributes a comparable depth penalty.
double resolve_beta(EnvMode mode, std::size_t n_pairs, double base = 0.1);

// mean instance energy over n_runs sampled shots
double estimate_expectation(const sim::Circuit& circuit, std::span<const double> energies,
                            int n_runs, Rng& rng);
// exact limit: sum_i |c_i|^2 E_i
double exact_expectation(const sim::Circuit& circuit, std::span<const double> energies);

struct StepTrace {
    int step = 0;     // global interaction counter
    int episode = 0;  // episode counter
    int step_in_episode = 0;
    int action = 0;
    double reward = 0.0;
    double expectation = 0.0;
    int depth = 0;
    int patience = 0;
    bool done = false;
};

struct HistoryEntry {
    sim::Circuit circuit;  // snapshot after the step's inner optimization
    double reward = 0.0;
    double expectation = 0.0;
    int episode = 0;
    int step_in_episode = 0;
};

// Circuit-construction environment: the state is a parameterized circuit
// seeded with a Hadamard layer; each action appends gate(s) at angle 0,
// the inner optimizer tunes the new parameters, and the reward trades the
// energy estimate against circuit depth. Episodes end when patience runs
// out or the step cap is hit. One instance is single-threaded; distinct
// instances are independent.
class CircuitEnv : public agent::EnvInterface {
  public:
    CircuitEnv(problems::QuboInstance instance, EnvConfig config, std::uint64_t shot_seed);

    int observation_dim() const override { return static_cast<int>(energies_.size()); }
    int action_count() const override { return static_cast<int>(space_.actions.size()); }
    std::vector<double> reset() override;
    Step step(int action) override;

    const ActionSpace& action_space() const { return space_; }
    const EnvConfig& config() const { return config_; }
    const problems::QuboInstance& instance() const { return instance_; }
    std::span<const double> energy_table() const { return energies_; }
    const sim::Circuit& circuit() const { return circuit_; }
    const std::vector<HistoryEntry>& history() const { return history_; }
    const std::vector<StepTrace>& traces() const { return traces_; }

    int patience() const { return patience_; }
    int step_count() const { return step_count_; }
    double best_episode_reward() const { return best_episode_reward_; }

  private:
    std::vector<double> observe();
    double objective_estimate(const sim::StateVector& state);

    problems::QuboInstance instance_;
    EnvConfig config_;
    ActionSpace space_;
    std::vector<double> energies_;
    Rng rng_;

    sim::Circuit circuit_;
    std::vector<ActionDescriptor> block_gates_;
    double best_episode_reward_ = 0.0;
    int patience_ = 0;
    int step_count_ = 0;
    int episode_ = -1;
    int total_steps_ = 0;
    bool terminal_ = true;

    std::vector<HistoryEntry> history_;
    std::vector<StepTrace> traces_;
};

struct FinalizeResult {
    sim::Circuit circuit;  // the best-reward circuit, re-tuned
    double estimate = 0.0;
    double pre_tune_estimate = 0.0;
    std::size_t history_index = 0;
};

// Picks the highest-reward circuit across the whole history (earliest on
// ties) and re-optimizes ALL of its parameters from their stored values.
FinalizeResult finalize(const std::vector<HistoryEntry>& history,
                        std::span<const double> energies, const EnvConfig& config,
                        int budget_evals, Rng& rng);

}  // namespace rlvqc::env
