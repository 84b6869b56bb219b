#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spikesweep {

/// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::vector<std::size_t> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Preferential attachment grown from m isolated seed nodes. Each new node
/// links to m distinct earlier nodes, picked with probability proportional
/// to degree + 1. Yields exactly (n - m) * m edges.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Every unordered pair kept independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// "<u> <v>" per line.
std::string format_edge_list(const Graph& g);

} // namespace spikesweep
