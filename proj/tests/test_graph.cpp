#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spikesweep/graph.hpp"
#include "spikesweep/weight_init.hpp"

using namespace spikesweep;

namespace {

bool connected(const Graph& g)
{
    std::vector<std::size_t> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
    for (std::size_t v = 1; v < g.node_count(); ++v)
        if (find(v) != find(0)) return false;
    return true;
}

void check_invariants(const Graph& g)
{
    const auto deg = g.degrees();
    CHECK(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == 2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        CHECK(u < v);
        CHECK(v < g.node_count());
    }
    CHECK(std::adjacent_find(g.edges().begin(), g.edges().end()) == g.edges().end());
}

std::size_t max_degree(const Graph& g)
{
    const auto d = g.degrees();
    return *std::max_element(d.begin(), d.end());
}

} // namespace

TEST_CASE("graph construction rejects bad edges")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK(Graph(3, {{2, 0}}).edges().front() == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("barabasi-albert")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto tree = barabasi_albert(5, 1, seed);
        CHECK(tree.edge_count() == 4);
        CHECK(connected(tree));
        check_invariants(tree);
    }
    CHECK(barabasi_albert(10, 2, 1).edge_count() == 16);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = barabasi_albert(100, 3, seed);
        CHECK(g.edge_count() == 97 * 3);
        check_invariants(g);
    }
    CHECK(barabasi_albert(50, 2, 8) == barabasi_albert(50, 2, 8));
    CHECK_THROWS_AS(barabasi_albert(5, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(barabasi_albert(5, 0, 0), std::invalid_argument);
}

TEST_CASE("erdos-renyi")
{
    CHECK(erdos_renyi(30, 0.0, 1).edge_count() == 0);
    CHECK(erdos_renyi(30, 1.0, 1).edge_count() == 435);
    CHECK(erdos_renyi(40, 0.3, 4) == erdos_renyi(40, 0.3, 4));
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), std::invalid_argument);

    // Edge count ~ Binomial(4950, 0.1): mean 495, sd 21.1 per graph.
    auto mean_edges = [](std::uint64_t first, std::uint64_t count) {
        double total = 0.0;
        for (std::uint64_t seed = first; seed < first + count; ++seed) {
            const auto g = erdos_renyi(100, 0.1, seed);
            check_invariants(g);
            total += static_cast<double>(g.edge_count());
        }
        return total / static_cast<double>(count);
    };
    const double sd = std::sqrt(4950 * 0.1 * 0.9);
    CHECK(std::abs(mean_edges(0, 5000) - 495.0) <= 3.0 * sd / std::sqrt(5000.0));
}

TEST_CASE("preferential attachment has heavier degree tails than matched ER")
{
    const double p = matched_er_probability(100, 2);
    CHECK(p == doctest::Approx(196.0 / 4950.0));
    double ba = 0.0;
    double er = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        ba += static_cast<double>(max_degree(barabasi_albert(100, 2, seed)));
        er += static_cast<double>(max_degree(erdos_renyi(100, p, seed)));
    }
    CHECK(ba / 200.0 > er / 200.0);
}

TEST_CASE("edge list format")
{
    CHECK(format_edge_list(Graph(4, {{3, 1}, {0, 2}})) == "0 2\n1 3\n");
}
