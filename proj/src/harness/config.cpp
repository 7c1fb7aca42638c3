#include "rlvqc/harness/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rlvqc::harness {

const char* method_name(Method m) {
    switch (m) {
        case Method::Qaoa: return "qaoa";
        case Method::RlvqcGlobal: return "rlvqc-global";
        default: return "rlvqc-block";
    }
}

Method method_from_name(const std::string& name) {
    if (name == "qaoa") return Method::Qaoa;
    if (name == "rlvqc-global") return Method::RlvqcGlobal;
    if (name == "rlvqc-block") return Method::RlvqcBlock;
    throw std::invalid_argument("unknown method: " + name);
}

std::string ExperimentConfig::resolved_out_root() const {
    if (!out_root.empty()) return out_root;
    if (const char* env = std::getenv("RLVQC_OUT")) return env;
    return "./out";
}

agent::PpoConfig ExperimentConfig::resolved_ppo(Method m) const {
    agent::PpoConfig cfg = ppo;
    cfg.total_steps = total_steps > 0 ? total_steps : (m == Method::RlvqcGlobal ? 3000 : 250);
    cfg.steps_per_epoch =
        steps_per_epoch > 0 ? steps_per_epoch : (m == Method::RlvqcGlobal ? 300 : 25);
    return cfg;
}

env::EnvConfig ExperimentConfig::resolved_env(Method m, int n_qubits,
                                              std::size_t n_pairs) const {
    env::EnvConfig cfg;
    cfg.mode = m == Method::RlvqcGlobal ? env::EnvMode::Global : env::EnvMode::Block;
    cfg.beta = env::resolve_beta(cfg.mode, n_pairs, beta);
    cfg.n_runs = n_runs;
    cfg.exact_expectation = exact;
    cfg.inner_opt_evals = inner_opt_evals;
    cfg.patience_init = patience;
    cfg.max_ep_len = max_ep_len > 0 ? max_ep_len : env::max_episode_steps(cfg.mode, n_qubits);
    cfg.optimize_all_params = optimize_all_params;
    return cfg;
}

namespace {

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

std::string join_int(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

std::vector<std::uint64_t> split_u64(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::strtoull(tok.c_str(), nullptr, 10));
    return out;
}

std::vector<int> split_int(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<int>(std::strtol(tok.c_str(), nullptr, 10)));
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::invalid_argument("expected a boolean, got: " + s);
}

}  // namespace

std::map<std::string, std::string> ExperimentConfig::to_map() const {
    std::map<std::string, std::string> kv;
    kv["method"] = method_name(method);
    kv["problem"] = problem;
    kv["topology"] = topology;
    kv["n"] = std::to_string(n);
    kv["seeds"] = join_u64(seeds);
    kv["out"] = resolved_out_root();
    kv["workers"] = std::to_string(workers);
    kv["env.n_runs"] = std::to_string(n_runs);
    kv["env.exact"] = exact ? "true" : "false";
    kv["env.beta"] = fmt_double(beta);
    kv["env.inner_opt_evals"] = std::to_string(inner_opt_evals);
    kv["env.patience"] = std::to_string(patience);
    kv["env.optimize_all_params"] = optimize_all_params ? "true" : "false";
    kv["env.max_ep_len"] = std::to_string(max_ep_len);
    kv["ppo.gamma"] = fmt_double(ppo.gamma);
    kv["ppo.lambda"] = fmt_double(ppo.gae_lambda);
    kv["ppo.clip"] = fmt_double(ppo.clip_epsilon);
    kv["ppo.pi_lr"] = fmt_double(ppo.pi_lr);
    kv["ppo.vf_lr"] = fmt_double(ppo.vf_lr);
    kv["ppo.train_pi_iters"] = std::to_string(ppo.train_pi_iters);
    kv["ppo.train_v_iters"] = std::to_string(ppo.train_v_iters);
    kv["ppo.target_kl"] = fmt_double(ppo.target_kl);
    kv["ppo.hidden"] = join_int(ppo.hidden);
    kv["ppo.total_steps"] = std::to_string(total_steps);
    kv["ppo.steps_per_epoch"] = std::to_string(steps_per_epoch);
    kv["qaoa.p"] = std::to_string(qaoa_p);
    kv["qaoa.budget"] = std::to_string(qaoa_budget);
    kv["finalize.budget"] = std::to_string(finalize_budget);
    return kv;
}

void ExperimentConfig::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "method") method = method_from_name(value);
        else if (key == "problem") problem = value;
        else if (key == "topology") topology = value;
        else if (key == "n") n = std::stoi(value);
        else if (key == "seeds") seeds = split_u64(value);
        else if (key == "out") out_root = value;
        else if (key == "workers") workers = std::stoi(value);
        else if (key == "env.n_runs") n_runs = std::stoi(value);
        else if (key == "env.exact") exact = parse_bool(value);
        else if (key == "env.beta") beta = std::stod(value);
        else if (key == "env.inner_opt_evals") inner_opt_evals = std::stoi(value);
        else if (key == "env.patience") patience = std::stoi(value);
        else if (key == "env.optimize_all_params") optimize_all_params = parse_bool(value);
        else if (key == "env.max_ep_len") max_ep_len = std::stoi(value);
        else if (key == "ppo.gamma") ppo.gamma = std::stod(value);
        else if (key == "ppo.lambda") ppo.gae_lambda = std::stod(value);
        else if (key == "ppo.clip") ppo.clip_epsilon = std::stod(value);
        else if (key == "ppo.pi_lr") ppo.pi_lr = std::stod(value);
        else if (key == "ppo.vf_lr") ppo.vf_lr = std::stod(value);
        else if (key == "ppo.train_pi_iters") ppo.train_pi_iters = std::stoi(value);
        else if (key == "ppo.train_v_iters") ppo.train_v_iters = std::stoi(value);
        else if (key == "ppo.target_kl") ppo.target_kl = std::stod(value);
        else if (key == "ppo.hidden") ppo.hidden = split_int(value);
        else if (key == "ppo.total_steps") total_steps = std::stoi(value);
        else if (key == "ppo.steps_per_epoch") steps_per_epoch = std::stoi(value);
        else if (key == "qaoa.p") qaoa_p = std::stoi(value);
        else if (key == "qaoa.budget") qaoa_budget = std::stoi(value);
        else if (key == "finalize.budget") finalize_budget = std::stoi(value);
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            " is not key = value");
            continue;
        }
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("empty config key");
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string default_config_text() {
    return R"(# rlvqc experiment configuration (key = value, '#' comments)

# method: qaoa | rlvqc-global | rlvqc-block
method = rlvqc-block
# problem: maxcut | mvc | maxclique | all
problem = all
# topology: 3-regular | erdos-renyi-0.2 | erdos-renyi-0.7 | barabasi-albert-low |
#           barabasi-albert-high | grid2d | star | cycle | all
topology = all
n = 8
# master seeds, one independent run each
seeds = 1,2,3,4,5
# output root (also settable via the RLVQC_OUT environment variable)
#out = ./out
workers = 1

# shots per expectation estimate; env.exact = true bypasses sampling
env.n_runs = 1000
env.exact = false
# depth penalty; block mode divides it by the interacting-pair count
env.beta = 0.1
# inner optimizer evaluation cap per environment step
env.inner_opt_evals = 50
env.patience = 3
# refit all parameters at every step instead of the new gate's only
env.optimize_all_params = false
# 0: per-method protocol value (2n for global, 5 for block)
env.max_ep_len = 0

ppo.gamma = 0.99
ppo.lambda = 0.97
ppo.clip = 0.2
ppo.pi_lr = 0.0003
ppo.vf_lr = 0.001
ppo.train_pi_iters = 80
ppo.train_v_iters = 80
ppo.target_kl = 0.01
ppo.hidden = 64,64
# 0: per-method protocol values (3000/300 global, 250/25 block)
ppo.total_steps = 0
ppo.steps_per_epoch = 0

# baseline layers and optimizer budget
qaoa.p = 1
qaoa.budget = 1000
# final re-optimization budget for the best circuit
finalize.budget = 1000
)";
}

}  // namespace rlvqc::harness
