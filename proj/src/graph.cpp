#include "spikesweep/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace spikesweep {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), edges_(std::move(edges))
{
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u >= n_ || v >= n_) throw std::invalid_argument("graph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("graph: duplicate edge");
    }
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed)
{
    if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert requires 1 <= m < n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::size_t> deg(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve((n - m) * m);
    std::vector<char> chosen(n, 0);
    std::vector<std::size_t> targets;

    for (std::size_t v = m; v < n; ++v) {
        targets.clear();
        double total = 0.0;
        for (std::size_t u = 0; u < v; ++u) total += static_cast<double>(deg[u] + 1);
        while (targets.size() < m) {
            // Sample among the not-yet-chosen earlier nodes.
            const double x = unit(rng) * total;
            double acc = 0.0;
            std::size_t pick = v;
            for (std::size_t u = 0; u < v; ++u) {
                if (chosen[u]) continue;
                acc += static_cast<double>(deg[u] + 1);
                pick = u;
                if (x < acc) break;
            }
            chosen[pick] = 1;
            total -= static_cast<double>(deg[pick] + 1);
            targets.push_back(pick);
        }
        for (auto u : targets) {
            chosen[u] = 0;
            edges.emplace_back(u, v);
            ++deg[u];
            ++deg[v];
        }
    }
    return Graph(n, std::move(edges));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi requires 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (unit(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g)
{
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace spikesweep
