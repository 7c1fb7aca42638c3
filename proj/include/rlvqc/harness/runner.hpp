#pragma once

#include "rlvqc/harness/config.hpp"
#include "rlvqc/harness/instances.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rlvqc::harness {

// One (instance, seed) execution. Returns the full run record; the
// line-delimited episode trace is returned separately so it can live in a
// sidecar file next to the record.
struct RunResult {
    nlohmann::json record;
    std::string trace_jsonl;  // empty for the baseline method
};

RunResult run_single(const problems::QuboInstance& qubo, const InstanceRef& ref, Method method,
                     std::uint64_t master_seed, const ExperimentConfig& config);

// Executes every (selected instance, seed) pair over a worker pool and
// writes <out>/runs/<id>_<method>_seed<k>.json (+ .trace.jsonl). Returns
// the record paths. Throws if instance files are missing.
std::vector<std::string> run_experiment(const ExperimentConfig& config);

// The fields a rerun must reproduce bit-identically: everything except
// wall-clock timing.
nlohmann::json reproducibility_payload(nlohmann::json record);

std::string record_path(const std::string& out_root, const InstanceRef& ref, Method method,
                        std::uint64_t seed);

}  // namespace rlvqc::harness
