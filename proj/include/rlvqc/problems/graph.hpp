#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rlvqc::problems {

enum class Topology {
    ThreeRegular,
    ErdosRenyi,       // edge probability p
    BarabasiAlbert,   // m attachments per new vertex
    Grid2d,           // `side` vertices per row, n/side rows
    Star,
    Cycle,
};

// Deterministic graph request. For the random topologies, `seed` is the
// start of a seed search: the generator walks seeds upward and keeps the
// first one whose sample is a connected simple graph.
struct GraphSpec {
    Topology topology = Topology::Cycle;
    int n = 8;
    double p = 0.0;          // ErdosRenyi
    int m = 0;               // BarabasiAlbert
    int side = 4;            // Grid2d
    std::uint64_t seed = 0;  // random topologies only
};

// Simple undirected connected graph; edges are (u, v) with u < v, sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    bool has_edge(int u, int v) const;
};

bool is_connected(const Graph& g);

// Throws std::invalid_argument on infeasible specs (3-regular with odd n,
// side not dividing n, ...) and std::runtime_error when no connected
// sample is found within 10^4 seeds.
Graph generate_graph(const GraphSpec& spec);

// "n m" header then one "u v" line per edge; bit-exact round-trip.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace rlvqc::problems
