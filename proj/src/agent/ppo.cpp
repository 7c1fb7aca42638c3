#include "rlvqc/agent/ppo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rlvqc::agent {

void PpoConfig::validate() const {
    if (steps_per_epoch < 1 || total_steps < steps_per_epoch)
        throw std::invalid_argument("need total_steps >= steps_per_epoch >= 1");
    if (gamma <= 0.0 || gamma > 1.0) throw std::invalid_argument("gamma must be in (0, 1]");
    if (gae_lambda < 0.0 || gae_lambda > 1.0)
        throw std::invalid_argument("gae_lambda must be in [0, 1]");
    if (clip_epsilon <= 0.0) throw std::invalid_argument("clip_epsilon must be positive");
    if (train_pi_iters < 1 || train_v_iters < 1)
        throw std::invalid_argument("gradient-step caps must be >= 1");
}

void Trajectory::close_segment(double bootstrap_value) {
    if (!segment_end.empty() && segment_end.back() == steps.size()) return;  // empty segment
    segment_end.push_back(steps.size());
    bootstrap.push_back(bootstrap_value);
}

void compute_advantages(Trajectory& traj, double gamma, double gae_lambda) {
    if (traj.steps.empty()) throw std::invalid_argument("empty trajectory");
    if (traj.segment_end.empty() || traj.segment_end.back() != traj.steps.size())
        throw std::invalid_argument("trajectory has an unclosed segment");
    traj.advantages.assign(traj.steps.size(), 0.0);
    traj.returns.assign(traj.steps.size(), 0.0);
    std::size_t begin = 0;
    for (std::size_t seg = 0; seg < traj.segment_end.size(); ++seg) {
        const std::size_t end = traj.segment_end[seg];
        double next_value = traj.bootstrap[seg];
        double next_adv = 0.0;
        for (std::size_t t = end; t-- > begin;) {
            const double delta =
                traj.steps[t].reward + gamma * next_value - traj.steps[t].value;
            next_adv = delta + gamma * gae_lambda * next_adv;
            traj.advantages[t] = next_adv;
            traj.returns[t] = next_adv + traj.steps[t].value;
            next_value = traj.steps[t].value;
        }
        begin = end;
    }
}

std::vector<double> normalize(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    const double scale = 1.0 / (std::sqrt(var) + 1e-8);
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) * scale;
    return out;
}

std::vector<double> softmax(std::span<const double> logits) {
    double m = logits[0];
    for (double l : logits) m = std::max(m, l);
    std::vector<double> p(logits.size());
    double z = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        p[i] = std::exp(logits[i] - m);
        z += p[i];
    }
    for (double& x : p) x /= z;
    return p;
}

double log_softmax_at(std::span<const double> logits, int action) {
    double m = logits[0];
    for (double l : logits) m = std::max(m, l);
    double z = 0.0;
    for (double l : logits) z += std::exp(l - m);
    return logits[static_cast<std::size_t>(action)] - m - std::log(z);
}

int sample_action(std::span<const double> probabilities, Rng& rng) {
    double total = 0.0;
    for (double p : probabilities) {
        if (p < -1e-12) throw std::invalid_argument("negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw std::invalid_argument("probabilities must sum to 1");
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probabilities.size() - 1);
}

double policy_loss_and_grad(const Mlp& pi, const Trajectory& traj,
                            std::span<const double> norm_adv, double clip_epsilon,
                            std::span<double> grad, double* mean_kl, double* entropy) {
    const std::size_t n = traj.steps.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    Mlp::Workspace ws;
    std::vector<double> grad_out(static_cast<std::size_t>(pi.shape().output_dim));
    double loss = 0.0, kl = 0.0, ent = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const StepSample& s = traj.steps[t];
        const auto logits = pi.forward(s.obs, ws);
        const auto probs = softmax(logits);
        const double logp = log_softmax_at(logits, s.action);
        const double ratio = std::exp(logp - s.logp);
        const double adv = norm_adv[t];
        loss -= clipped_objective(ratio, adv, clip_epsilon) * inv_n;
        kl += (s.logp - logp) * inv_n;
        for (double p : probs)
            if (p > 0.0) ent -= p * std::log(p) * inv_n;

        // gradient flows only while the unclipped branch attains the min
        const double clipped =
            std::min(std::max(ratio, 1.0 - clip_epsilon), 1.0 + clip_epsilon) * adv;
        const double g = ratio * adv <= clipped ? ratio * adv : 0.0;
        if (g != 0.0) {
            // d(-obj)/d(logit_k) = -g * (1[k=a] - p_k) / n
            for (std::size_t k = 0; k < probs.size(); ++k)
                grad_out[k] = g * probs[k] * inv_n;
            grad_out[static_cast<std::size_t>(s.action)] -= g * inv_n;
            pi.backward(ws, grad_out, grad);
        }
    }
    if (mean_kl) *mean_kl = kl;
    if (entropy) *entropy = ent;
    return loss;
}

double value_loss_and_grad(const Mlp& vf, const Trajectory& traj, std::span<double> grad) {
    const std::size_t n = traj.steps.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    Mlp::Workspace ws;
    double loss = 0.0;
    double grad_out[1];
    for (std::size_t t = 0; t < n; ++t) {
        const StepSample& s = traj.steps[t];
        const double v = vf.forward(s.obs, ws)[0];
        const double err = v - traj.returns[t];
        loss += err * err * inv_n;
        grad_out[0] = 2.0 * err * inv_n;
        vf.backward(ws, {grad_out, 1}, grad);
    }
    return loss;
}

ActorCritic::ActorCritic(int obs_dim, int n_actions, const PpoConfig& config, Rng& init_rng)
    : pi_(MlpShape{obs_dim, config.hidden, n_actions}),
      v_(MlpShape{obs_dim, config.hidden, 1}),
      pi_opt_(pi_.params().size(), config.pi_lr),
      v_opt_(v_.params().size(), config.vf_lr) {
    pi_.init_orthogonal(init_rng, 1.0, 0.0);  // zero head: uniform initial policy
    v_.init_orthogonal(init_rng, 1.0, 1.0);
}

ActorCritic::ActorCritic(Mlp pi, Mlp v, const PpoConfig& config)
    : pi_(std::move(pi)),
      v_(std::move(v)),
      pi_opt_(pi_.params().size(), config.pi_lr),
      v_opt_(v_.params().size(), config.vf_lr) {}

std::vector<double> ActorCritic::policy_logits(std::span<const double> obs) const {
    const auto out = pi_.forward(obs, scratch_);
    return {out.begin(), out.end()};
}

std::vector<double> ActorCritic::policy_probs(std::span<const double> obs) const {
    return softmax(policy_logits(obs));
}

double ActorCritic::value(std::span<const double> obs) const {
    return v_.forward(obs, scratch_)[0];
}

namespace {

bool all_finite(std::span<const double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

UpdateDiagnostics ActorCritic::update(const Trajectory& traj, const PpoConfig& config) {
    UpdateDiagnostics diag;
    const auto norm_adv = normalize(traj.advantages);
    std::vector<double> grad(pi_.params().size());

    for (int it = 0; it < config.train_pi_iters; ++it) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double kl = 0.0, ent = 0.0;
        const double loss =
            policy_loss_and_grad(pi_, traj, norm_adv, config.clip_epsilon, grad, &kl, &ent);
        if (it == 0) {
            diag.pi_loss = loss;
            diag.entropy = ent;
        }
        diag.mean_kl = kl;
        if (kl > 1.5 * config.target_kl) {
            diag.early_stopped = true;
            break;
        }
        if (!all_finite(grad)) throw std::runtime_error("non-finite policy gradient");
        pi_opt_.step(pi_.params(), grad);
        ++diag.pi_iters;
    }

    std::vector<double> vgrad(v_.params().size());
    for (int it = 0; it < config.train_v_iters; ++it) {
        std::fill(vgrad.begin(), vgrad.end(), 0.0);
        const double loss = value_loss_and_grad(v_, traj, vgrad);
        if (it == 0) diag.v_loss = loss;
        if (!all_finite(vgrad)) throw std::runtime_error("non-finite value gradient");
        v_opt_.step(v_.params(), vgrad);
        ++diag.v_iters;
    }
    if (!all_finite(pi_.params()) || !all_finite(v_.params()))
        throw std::runtime_error("non-finite network parameters after update");
    return diag;
}

std::string ActorCritic::to_text() const {
    std::ostringstream out;
    out << "actor-critic\n" << pi_.to_text() << v_.to_text();
    return out.str();
}

ActorCritic ActorCritic::from_text(const std::string& text, const PpoConfig& config) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    if (header != "actor-critic") throw std::invalid_argument("bad checkpoint header");
    // the two mlp blocks follow back to back; split on the second "mlp" line
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t second = rest.find("\nmlp ");
    if (second == std::string::npos) throw std::invalid_argument("checkpoint missing value net");
    Mlp pi = Mlp::from_text(rest.substr(0, second + 1));
    Mlp v = Mlp::from_text(rest.substr(second + 1));
    return ActorCritic(std::move(pi), std::move(v), config);
}

TrainResult train(EnvInterface& env, ActorCritic& agent, const PpoConfig& config, Rng& rng) {
    config.validate();
    if (env.observation_dim() != agent.obs_dim() || env.action_count() != agent.n_actions())
        throw std::invalid_argument("environment/agent dimension mismatch");

    TrainResult result;
    int remaining = config.total_steps;
    while (remaining > 0) {
        const int epoch_steps = std::min(config.steps_per_epoch, remaining);
        remaining -= epoch_steps;

        Trajectory traj;
        EpochDiagnostics epoch;
        double episode_reward_sum = 0.0;
        std::vector<double> obs = env.reset();
        double episode_reward = 0.0;
        for (int t = 0; t < epoch_steps; ++t) {
            const auto logits = agent.policy_logits(obs);
            const auto probs = softmax(logits);
            const int action = sample_action(probs, rng);
            StepSample sample;
            sample.obs = obs;
            sample.action = action;
            sample.value = agent.value(obs);
            sample.logp = log_softmax_at(logits, action);
            auto outcome = env.step(action);
            sample.reward = outcome.reward;
            episode_reward += outcome.reward;
            result.step_rewards.push_back(outcome.reward);
            traj.steps.push_back(std::move(sample));

            const bool epoch_cut = t + 1 == epoch_steps;
            if (outcome.done) {
                traj.close_segment(0.0);
                episode_reward_sum += episode_reward;
                ++epoch.episodes_completed;
                episode_reward = 0.0;
                if (!epoch_cut) obs = env.reset();
            } else if (epoch_cut) {
                // cut mid-episode: bootstrap with the value estimate
                traj.close_segment(agent.value(outcome.obs));
            } else {
                obs = std::move(outcome.obs);
            }
        }
        compute_advantages(traj, config.gamma, config.gae_lambda);
        epoch.update = agent.update(traj, config);
        epoch.mean_episode_reward = epoch.episodes_completed > 0
                                        ? episode_reward_sum / epoch.episodes_completed
                                        : episode_reward;
        result.epochs.push_back(epoch);
    }
    return result;
}

}  // namespace rlvqc::agent
