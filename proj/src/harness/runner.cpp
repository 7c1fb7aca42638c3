#include "rlvqc/harness/runner.hpp"

#include "rlvqc/baseline/metrics.hpp"
#include "rlvqc/baseline/qaoa.hpp"
#include "rlvqc/env/environment.hpp"
#include "rlvqc/sim/kernels.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace rlvqc::harness {

namespace {

using nlohmann::json;

json composition_json(const baseline::CompositionReport& report) {
    return {{"gate_count", report.gate_count},
            {"depth", report.depth},
            {"census",
             {{"h", report.census.h},
              {"rx", report.census.rx},
              {"ry", report.census.ry},
              {"rz", report.census.rz},
              {"cx", report.census.cx}}},
            {"fractions",
             {{"h", report.frac_h},
              {"rx", report.frac_rx},
              {"ry", report.frac_ry},
              {"rz", report.frac_rz},
              {"cx", report.frac_cx}}}};
}

json trace_line(const env::StepTrace& tr) {
    return {{"step", tr.step},
            {"episode", tr.episode},
            {"step_in_episode", tr.step_in_episode},
            {"action", tr.action},
            {"reward", tr.reward},
            {"expectation", tr.expectation},
            {"depth", tr.depth},
            {"patience", tr.patience},
            {"done", tr.done}};
}

}  // namespace

RunResult run_single(const problems::QuboInstance& qubo, const InstanceRef& ref, Method method,
                     std::uint64_t master_seed, const ExperimentConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto extrema = problems::brute_force_extrema(qubo);
    const auto energies = problems::energy_table(qubo);

    json record;
    record["schema"] = "rlvqc-run-v1";
    record["instance"] = {{"id", ref.id},
                          {"problem", problems::problem_name(ref.problem)},
                          {"topology", ref.topology.label},
                          {"topology_selector", ref.topology.selector},
                          {"n", ref.n},
                          {"h_min", extrema.min_energy},
                          {"h_max", extrema.max_energy},
                          {"qubo", problems::qubo_to_text(qubo)}};
    record["method"] = method_name(method);
    record["master_seed"] = master_seed;
    record["kernel_backend"] = sim::active_kernels().name;
    {
        json cfg;
        for (const auto& [k, v] : config.to_map()) cfg[k] = v;
        record["config"] = cfg;
    }

    sim::Circuit final_circuit;
    double final_estimate = 0.0;
    std::string trace_jsonl;

    if (method == Method::Qaoa) {
        const auto circuit = baseline::build_qaoa(qubo, config.qaoa_p);
        Rng opt_rng = derive_rng(master_seed, "qaoa-opt");
        const auto result = baseline::optimize_qaoa(
            circuit, energies, config.qaoa_budget, {config.n_runs, config.exact}, opt_rng);
        final_circuit = circuit;
        final_circuit.params = result.params;
        final_estimate = result.estimate;
        record["qaoa"] = {{"p", config.qaoa_p}, {"evals_used", result.evals_used}};
    } else {
        const auto pairs = env::interacting_pairs(qubo);
        const env::EnvConfig env_cfg = config.resolved_env(method, qubo.n, pairs.size());
        const agent::PpoConfig ppo_cfg = config.resolved_ppo(method);
        env::CircuitEnv environment(qubo, env_cfg, derive_seed(master_seed, "shots"));
        Rng init_rng = derive_rng(master_seed, "net-init");
        agent::ActorCritic actor(environment.observation_dim(), environment.action_count(),
                                 ppo_cfg, init_rng);
        Rng action_rng = derive_rng(master_seed, "actions");
        const auto training = agent::train(environment, actor, ppo_cfg, action_rng);

        Rng finalize_rng = derive_rng(master_seed, "finalize");
        const auto finalized = env::finalize(environment.history(), energies, env_cfg,
                                             config.finalize_budget, finalize_rng);
        final_circuit = finalized.circuit;
        final_estimate = finalized.estimate;

        json epochs = json::array();
        for (const auto& ep : training.epochs)
            epochs.push_back({{"pi_loss", ep.update.pi_loss},
                              {"v_loss", ep.update.v_loss},
                              {"mean_kl", ep.update.mean_kl},
                              {"entropy", ep.update.entropy},
                              {"pi_iters", ep.update.pi_iters},
                              {"v_iters", ep.update.v_iters},
                              {"early_stopped", ep.update.early_stopped},
                              {"mean_episode_reward", ep.mean_episode_reward},
                              {"episodes", ep.episodes_completed}});
        record["training"] = {{"epochs", epochs},
                              {"env_steps", environment.traces().size()},
                              {"episodes", environment.traces().empty()
                                               ? 0
                                               : environment.traces().back().episode + 1},
                              {"best_history_index", finalized.history_index},
                              {"pre_tune_estimate", finalized.pre_tune_estimate},
                              {"action_count", environment.action_count()},
                              {"interacting_pairs", pairs.size()},
                              {"beta", env_cfg.beta}};

        std::ostringstream traces;
        for (const auto& tr : environment.traces()) traces << trace_line(tr).dump() << "\n";
        trace_jsonl = traces.str();
    }

    // a fresh estimate at the tuned parameters, the figure of merit
    Rng eval_rng = derive_rng(master_seed, "final-eval");
    const double final_eval =
        config.exact ? env::exact_expectation(final_circuit, energies)
                     : env::estimate_expectation(final_circuit, energies, config.n_runs,
                                                 eval_rng);
    const double ar_raw =
        baseline::approximation_ratio(final_eval, extrema.min_energy, extrema.max_energy);

    record["result"] = {{"optimizer_estimate", final_estimate},
                        {"final_estimate", final_eval},
                        {"ar_raw", ar_raw},
                        {"ar", baseline::clamp01(ar_raw)},
                        {"circuit", sim::to_text(final_circuit)},
                        {"composition", composition_json(baseline::composition_report(
                                            final_circuit))}};
    record["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(record), std::move(trace_jsonl)};
}

std::string record_path(const std::string& out_root, const InstanceRef& ref, Method method,
                        std::uint64_t seed) {
    return (fs::path(out_root) / "runs" /
            (ref.id + "_" + method_name(method) + "_seed" + std::to_string(seed) + ".json"))
        .string();
}

std::vector<std::string> run_experiment(const ExperimentConfig& config) {
    const std::string root = config.resolved_out_root();
    const auto instances = select_instances(config.problem, config.topology, config.n);
    if (instances.empty()) throw std::runtime_error("instance selector matched nothing");
    if (config.seeds.empty()) throw std::runtime_error("no seeds given");

    struct Job {
        InstanceRef ref;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& ref : instances)
        for (const auto seed : config.seeds) jobs.push_back({ref, seed});

    // fail fast on missing files before spawning workers
    std::vector<problems::QuboInstance> qubos;
    qubos.reserve(instances.size());
    for (const auto& ref : instances) qubos.push_back(load_instance(root, ref));

    fs::create_directories(fs::path(root) / "runs");
    std::vector<std::string> paths(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    const int workers = std::max(1, config.workers);

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            const std::size_t instance_idx =
                static_cast<std::size_t>(&job - jobs.data()) / config.seeds.size();
            const auto result =
                run_single(qubos[instance_idx], job.ref, config.method, job.seed, config);
            const std::string path = record_path(root, job.ref, config.method, job.seed);
            {
                std::ofstream out(path, std::ios::binary);
                out << result.record.dump(2) << "\n";
            }
            if (!result.trace_jsonl.empty()) {
                std::ofstream out(path.substr(0, path.size() - 5) + ".trace.jsonl",
                                  std::ios::binary);
                out << result.trace_jsonl;
            }
            paths[i] = path;
            {
                std::lock_guard lock(log_mutex);
                std::cout << "run " << job.ref.id << " " << method_name(config.method)
                          << " seed " << job.seed << ": ar="
                          << result.record["result"]["ar_raw"].get<double>() << " ("
                          << result.record["wall_time_s"].get<double>() << " s)\n";
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return paths;
}

nlohmann::json reproducibility_payload(nlohmann::json record) {
    record.erase("wall_time_s");
    return record;
}

}  // namespace rlvqc::harness
