#include "rlvqc/problems/graph.hpp"

#include "rlvqc/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rlvqc::problems {

namespace {

constexpr std::uint64_t kSeedSearchBound = 10000;

void canonicalize(Graph& g) {
    for (auto& [u, v] : g.edges)
        if (u > v) std::swap(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

Graph star_graph(int n) {
    Graph g{n, {}};
    for (int v = 1; v < n; ++v) g.edges.emplace_back(0, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g{n, {}};
    for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
    canonicalize(g);
    return g;
}

Graph grid_graph(int n, int side) {
    const int rows = n / side;
    Graph g{n, {}};
    const auto id = [side](int r, int c) { return r * side + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < side; ++c) {
            if (c + 1 < side) g.edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
        }
    canonicalize(g);
    return g;
}

Graph erdos_renyi_sample(int n, double p, Rng& rng) {
    Graph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.edges.emplace_back(u, v);
    return g;
}

// Preferential attachment: each new vertex attaches to m distinct targets
// drawn from the degree-weighted multiset of earlier endpoints.
Graph barabasi_albert_sample(int n, int m, Rng& rng) {
    Graph g{n, {}};
    std::vector<int> repeated;
    std::vector<int> targets(static_cast<std::size_t>(m));
    std::iota(targets.begin(), targets.end(), 0);
    for (int v = m; v < n; ++v) {
        std::set<int> chosen(targets.begin(), targets.end());
        for (int t : chosen) {
            g.edges.emplace_back(t, v);
            repeated.push_back(t);
            repeated.push_back(v);
        }
        std::set<int> next;
        while (static_cast<int>(next.size()) < m)
            next.insert(repeated[rng.uniform_index(repeated.size())]);
        targets.assign(next.begin(), next.end());
    }
    canonicalize(g);
    return g;
}

// Pairing model: 3 stubs per vertex, uniformly matched; the sample is
// rejected (empty graph returned) if it has self-loops or multi-edges.
Graph three_regular_sample(int n, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(3 * n));
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 3; ++s) stubs.push_back(v);
    // Fisher-Yates, then pair consecutive stubs
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
        std::swap(stubs[i], stubs[rng.uniform_index(i + 1)]);
    Graph g{n, {}};
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return {n, {}};
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return {n, {}};
        g.edges.emplace_back(u, v);
    }
    canonicalize(g);
    return g;
}

}  // namespace

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::pair{u, v});
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.n;
}

Graph generate_graph(const GraphSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    switch (spec.topology) {
        case Topology::Star: return star_graph(spec.n);
        case Topology::Cycle: return cycle_graph(spec.n);
        case Topology::Grid2d:
            if (spec.side < 1 || spec.n % spec.side != 0)
                throw std::invalid_argument("grid side must divide n");
            if (spec.n / spec.side < 2 && spec.side < 2)
                throw std::invalid_argument("degenerate grid");
            return grid_graph(spec.n, spec.side);
        case Topology::ThreeRegular:
            if (spec.n % 2 != 0) throw std::invalid_argument("3-regular needs even n");
            if (spec.n < 4) throw std::invalid_argument("3-regular needs n >= 4");
            break;
        case Topology::ErdosRenyi:
            if (spec.p <= 0.0 || spec.p > 1.0)
                throw std::invalid_argument("edge probability out of range");
            break;
        case Topology::BarabasiAlbert:
            if (spec.m < 1 || spec.m >= spec.n)
                throw std::invalid_argument("attachment count out of range");
            break;
    }
    // seed search over the random samplers
    for (std::uint64_t seed = spec.seed; seed < spec.seed + kSeedSearchBound; ++seed) {
        Rng rng(seed);
        Graph g;
        switch (spec.topology) {
            case Topology::ThreeRegular: g = three_regular_sample(spec.n, rng); break;
            case Topology::ErdosRenyi: g = erdos_renyi_sample(spec.n, spec.p, rng); break;
            default: g = barabasi_albert_sample(spec.n, spec.m, rng); break;
        }
        if (!g.edges.empty() && is_connected(g)) return g;
    }
    throw std::runtime_error("no connected graph found within the seed-search bound");
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << "\n";
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    Graph g;
    std::size_t m = 0;
    if (!(in >> g.n >> m)) throw std::invalid_argument("bad graph header");
    for (std::size_t i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
        g.edges.emplace_back(u, v);
    }
    return g;
}

}  // namespace rlvqc::problems
