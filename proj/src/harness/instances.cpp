#include "rlvqc/harness/instances.hpp"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace rlvqc::harness {

namespace {

std::string format_probability(double p) {
    std::ostringstream out;
    out << p;
    return out.str();  // 0.2 / 0.7
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<int> paper_sizes() { return {8, 12, 16}; }

std::vector<std::string> topology_selectors() {
    return {"3-regular",           "erdos-renyi-0.2", "erdos-renyi-0.7",
            "barabasi-albert-low", "barabasi-albert-high", "grid2d",
            "star",                "cycle"};
}

TopologyInfo resolve_topology(const std::string& selector, int n) {
    using problems::Topology;
    TopologyInfo info;
    info.selector = selector;
    info.spec.n = n;
    if (selector == "3-regular") {
        info.spec.topology = Topology::ThreeRegular;
        info.label = "3-regular";
    } else if (selector == "erdos-renyi-0.2" || selector == "erdos-renyi-0.7") {
        info.spec.topology = Topology::ErdosRenyi;
        info.spec.p = selector.back() == '2' ? 0.2 : 0.7;
        info.label = "erdos-renyi-" + format_probability(info.spec.p);
    } else if (selector == "barabasi-albert-low" || selector == "barabasi-albert-high") {
        info.spec.topology = Topology::BarabasiAlbert;
        info.spec.m = selector == "barabasi-albert-low"
                          ? static_cast<int>(std::ceil(0.2 * n))
                          : n / 2;
        info.label = "barabasi-albert-" + std::to_string(info.spec.m);
    } else if (selector == "grid2d") {
        info.spec.topology = Topology::Grid2d;
        info.spec.side = 4;
        info.label = "grid2d-4";
    } else if (selector == "star") {
        info.spec.topology = Topology::Star;
        info.label = "star";
    } else if (selector == "cycle") {
        info.spec.topology = Topology::Cycle;
        info.label = "cycle";
    } else {
        throw std::invalid_argument("unknown topology selector: " + selector);
    }
    return info;
}

std::vector<InstanceRef> select_instances(const std::string& problem_selector,
                                          const std::string& topology_selector, int n) {
    std::vector<problems::ProblemTag> problems_;
    if (problem_selector == "all")
        problems_ = {problems::ProblemTag::MaxCut, problems::ProblemTag::MinVertexCover,
                     problems::ProblemTag::MaxClique};
    else
        problems_ = {problems::problem_from_name(problem_selector)};

    std::vector<std::string> topos;
    if (topology_selector == "all")
        topos = topology_selectors();
    else
        topos = {topology_selector};

    std::vector<InstanceRef> out;
    for (const auto tag : problems_)
        for (const auto& sel : topos) {
            InstanceRef ref;
            ref.problem = tag;
            ref.topology = resolve_topology(sel, n);
            ref.n = n;
            ref.id = std::string(problems::problem_name(tag)) + "_" + ref.topology.label +
                     "_n" + std::to_string(n);
            out.push_back(std::move(ref));
        }
    return out;
}

std::string graph_path(const std::string& out_root, const TopologyInfo& topo, int n) {
    return (fs::path(out_root) / "instances" / "graphs" /
            (topo.label + "_n" + std::to_string(n) + ".graph.txt"))
        .string();
}

std::string qubo_path(const std::string& out_root, const InstanceRef& ref) {
    return (fs::path(out_root) / "instances" / "qubos" / (ref.id + ".qubo.txt")).string();
}

GenSummary gen_instances(const std::string& out_root, const std::vector<int>& sizes) {
    GenSummary summary;
    nlohmann::json manifest;
    manifest["graphs"] = nlohmann::json::array();
    manifest["qubos"] = nlohmann::json::array();
    for (int n : sizes) {
        for (const auto& selector : topology_selectors()) {
            const TopologyInfo topo = resolve_topology(selector, n);
            const problems::Graph graph = problems::generate_graph(topo.spec);
            write_file(graph_path(out_root, topo, n), problems::graph_to_text(graph));
            ++summary.graphs;
            manifest["graphs"].push_back({{"selector", selector},
                                          {"label", topo.label},
                                          {"n", n},
                                          {"edges", graph.edges.size()}});
            for (const InstanceRef& ref : select_instances("all", selector, n)) {
                const auto qubo = problems::build_qubo(graph, ref.problem);
                write_file(qubo_path(out_root, ref), problems::qubo_to_text(qubo));
                ++summary.qubos;
                manifest["qubos"].push_back(
                    {{"id", ref.id},
                     {"problem", problems::problem_name(ref.problem)},
                     {"topology", topo.label},
                     {"n", n},
                     {"penalty", qubo.penalty}});
            }
        }
    }
    write_file(fs::path(out_root) / "instances" / "manifest.json", manifest.dump(2) + "\n");
    return summary;
}

problems::QuboInstance load_instance(const std::string& out_root, const InstanceRef& ref) {
    const std::string path = qubo_path(out_root, ref);
    if (!fs::exists(path))
        throw std::runtime_error("missing instance file " + path +
                                 " (run gen-instances first)");
    return problems::qubo_from_text(read_file(path));
}

}  // namespace rlvqc::harness
