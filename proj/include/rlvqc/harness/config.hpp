#pragma once

#include "rlvqc/agent/ppo.hpp"
#include "rlvqc/env/environment.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rlvqc::harness {

enum class Method { Qaoa, RlvqcGlobal, RlvqcBlock };

const char* method_name(Method m);  // "qaoa", "rlvqc-global", "rlvqc-block"
Method method_from_name(const std::string& name);

// Full experiment configuration. Every field defaults to the published
// protocol values; a key=value config file and CLI flags override them.
struct ExperimentConfig {
    Method method = Method::RlvqcBlock;
    std::string problem = "all";   // maxcut | mvc | maxclique | all
    std::string topology = "all";  // selector id | all
    int n = 8;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};  // five independent runs
    std::string out_root;  // empty: $RLVQC_OUT or ./out
    int workers = 1;

    // expectation estimation
    int n_runs = 1000;
    bool exact = false;

    // environment
    double beta = 0.1;  // block runs divide by the interacting-pair count
    int inner_opt_evals = 50;
    int patience = 3;
    bool optimize_all_params = false;
    int max_ep_len = 0;  // 0: 2n (global) / 5 (block)

    // agent (0 picks the per-method protocol value)
    agent::PpoConfig ppo;
    int total_steps = 0;      // global 3000, block 250
    int steps_per_epoch = 0;  // global 300, block 25

    // baseline
    int qaoa_p = 1;
    int qaoa_budget = 1000;
    int finalize_budget = 1000;

    std::string resolved_out_root() const;
    agent::PpoConfig resolved_ppo(Method m) const;
    env::EnvConfig resolved_env(Method m, int n_qubits, std::size_t n_pairs) const;

    // flat key=value view; the snapshot stored in every run record
    std::map<std::string, std::string> to_map() const;
    void apply(const std::map<std::string, std::string>& kv);  // throws on unknown keys
};

// key = value lines, '#' comments, blank lines ignored
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> load_config_file(const std::string& path);

// fully commented config with every default, suitable for editing
std::string default_config_text();

}  // namespace rlvqc::harness
