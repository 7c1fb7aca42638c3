#pragma once

#include "rlvqc/problems/qubo.hpp"

#include <string>
#include <vector>

namespace rlvqc::harness {

// The benchmark grid: 8 topologies x 3 sizes = 24 graphs, each encoded as
// all three problems = 72 instances. Topology selectors are n-independent
// ("barabasi-albert-low" = ceil(0.2 n) attachments, "-high" = n/2); the
// resolved label carries the concrete parameter, mirroring the result
// tables ("barabasi-albert-2" at n = 8).
struct TopologyInfo {
    std::string selector;  // stable CLI id
    std::string label;     // resolved per-n label used in filenames/reports
    problems::GraphSpec spec;
};

std::vector<int> paper_sizes();                      // {8, 12, 16}
std::vector<std::string> topology_selectors();       // the 8 ids
TopologyInfo resolve_topology(const std::string& selector, int n);

struct InstanceRef {
    std::string id;  // "<problem>_<label>_n<n>"
    problems::ProblemTag problem;
    TopologyInfo topology;
    int n = 0;
};

std::vector<InstanceRef> select_instances(const std::string& problem_selector,
                                          const std::string& topology_selector, int n);

// Writes <root>/instances: graphs/, qubos/ and manifest.json. Idempotent
// and deterministic (identical bytes on rerun).
struct GenSummary {
    int graphs = 0;
    int qubos = 0;
};
GenSummary gen_instances(const std::string& out_root, const std::vector<int>& sizes);

std::string graph_path(const std::string& out_root, const TopologyInfo& topo, int n);
std::string qubo_path(const std::string& out_root, const InstanceRef& ref);

// Loads the QUBO for an instance; throws std::runtime_error with a
// gen-instances hint when the file is missing.
problems::QuboInstance load_instance(const std::string& out_root, const InstanceRef& ref);

}  // namespace rlvqc::harness
