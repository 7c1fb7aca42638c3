#pragma once

#include "rlvqc/agent/mlp.hpp"
#include "rlvqc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace rlvqc::agent {

// Training hyperparameters. Defaults follow the reference PPO settings;
// steps_per_epoch / total_steps are experiment-specific.
struct PpoConfig {
    double gamma = 0.99;
    double gae_lambda = 0.97;
    double clip_epsilon = 0.2;
    double pi_lr = 3e-4;
    double vf_lr = 1e-3;
    int train_pi_iters = 80;
    int train_v_iters = 80;
    int steps_per_epoch = 25;
    int total_steps = 250;
    double target_kl = 0.01;
    std::vector<int> hidden = {64, 64};

    int epochs() const { return (total_steps + steps_per_epoch - 1) / steps_per_epoch; }
    void validate() const;
};

struct StepSample {
    std::vector<double> obs;
    int action = 0;
    double reward = 0.0;
    double value = 0.0;
    double logp = 0.0;
};

// One epoch of rollout data. Steps are grouped into segments (episodes or
// epoch-cut episode prefixes); each segment carries the bootstrap value of
// its successor state: 0 at terminals, V(s_T) at cuts.
struct Trajectory {
    std::vector<StepSample> steps;
    std::vector<std::size_t> segment_end;  // exclusive step index per segment
    std::vector<double> bootstrap;         // one per segment

    std::vector<double> advantages;  // raw GAE(lambda), filled by compute_advantages
    std::vector<double> returns;     // advantage + value

    void close_segment(double bootstrap_value);
};

// Raw GAE(lambda) advantages and return targets (advantage + value).
// Normalization happens per update batch, not here.
void compute_advantages(Trajectory& traj, double gamma, double gae_lambda);

// mean 0 / std 1 over the batch (population std, epsilon-guarded)
std::vector<double> normalize(std::span<const double> values);

std::vector<double> softmax(std::span<const double> logits);

// log pi(action) for softmax logits, numerically stable
double log_softmax_at(std::span<const double> logits, int action);

// Draws an index from a probability vector. Throws if the entries are
// negative or do not sum to 1 within 1e-6.
int sample_action(std::span<const double> probabilities, Rng& rng);

// min(ratio * adv, clip(ratio) * adv): the per-sample pessimistic bound
inline double clipped_objective(double ratio, double advantage, double epsilon) {
    const double clipped = std::min(std::max(ratio, 1.0 - epsilon), 1.0 + epsilon) * advantage;
    return std::min(ratio * advantage, clipped);
}

// Batch policy loss -E[min(rho A, clip(rho) A)] and its parameter
// gradient; also reports the rollout-vs-current mean KL and entropy.
// Exposed so tests can check the analytic gradient by finite differences.
double policy_loss_and_grad(const Mlp& pi, const Trajectory& traj,
                            std::span<const double> norm_adv, double clip_epsilon,
                            std::span<double> grad, double* mean_kl, double* entropy);

// Mean squared value-regression loss and gradient.
double value_loss_and_grad(const Mlp& vf, const Trajectory& traj, std::span<double> grad);

struct UpdateDiagnostics {
    double pi_loss = 0.0;   // before the update
    double v_loss = 0.0;    // before the update
    double mean_kl = 0.0;   // at the last evaluated iteration
    double entropy = 0.0;
    int pi_iters = 0;
    int v_iters = 0;
    bool early_stopped = false;
};

// Policy + value networks with disjoint parameters and their optimizers.
class ActorCritic {
  public:
    ActorCritic(int obs_dim, int n_actions, const PpoConfig& config, Rng& init_rng);

    int obs_dim() const { return pi_.shape().input_dim; }
    int n_actions() const { return pi_.shape().output_dim; }

    std::vector<double> policy_probs(std::span<const double> obs) const;
    std::vector<double> policy_logits(std::span<const double> obs) const;
    double value(std::span<const double> obs) const;

    // Clipped-surrogate policy ascent with KL early stop, then value
    // regression. Throws std::runtime_error on non-finite gradients.
    UpdateDiagnostics update(const Trajectory& traj, const PpoConfig& config);

    const Mlp& policy_net() const { return pi_; }
    const Mlp& value_net() const { return v_; }

    std::string to_text() const;
    static ActorCritic from_text(const std::string& text, const PpoConfig& config);

  private:
    ActorCritic(Mlp pi, Mlp v, const PpoConfig& config);
    Mlp pi_, v_;
    Adam pi_opt_, v_opt_;
    mutable Mlp::Workspace scratch_;
};

// Minimal environment surface the trainer drives; implemented by the
// circuit-construction environments.
class EnvInterface {
  public:
    virtual ~EnvInterface() = default;
    virtual int observation_dim() const = 0;
    virtual int action_count() const = 0;
    virtual std::vector<double> reset() = 0;
    struct Step {
        std::vector<double> obs;
        double reward = 0.0;
        bool done = false;
    };
    virtual Step step(int action) = 0;
};

struct EpochDiagnostics {
    UpdateDiagnostics update;
    double mean_episode_reward = 0.0;
    int episodes_completed = 0;
};

struct TrainResult {
    std::vector<EpochDiagnostics> epochs;
    std::vector<double> step_rewards;  // one per interaction, env order
};

// On-policy training: total_steps interactions in epochs of
// steps_per_epoch, PPO update per epoch. Episodes cut at an epoch
// boundary bootstrap with the value estimate and the env is reset.
TrainResult train(EnvInterface& env, ActorCritic& agent, const PpoConfig& config, Rng& rng);

}  // namespace rlvqc::agent
