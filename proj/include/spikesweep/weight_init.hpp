#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spikesweep/graph.hpp"

namespace spikesweep {

struct WeightRange {
    double low = 0.0;
    double high = 1.0;

    void validate() const;
    double midpoint() const { return 0.5 * (low + high); }
    auto operator<=>(const WeightRange&) const = default;
};

struct UniformRandom {
    bool operator==(const UniformRandom&) const = default;
};

struct BarabasiAlbert {
    std::size_t n = 100;
    std::size_t m = 2;
    bool operator==(const BarabasiAlbert&) const = default;
};

struct ErdosRenyi {
    std::size_t n = 100;
    // Matches BarabasiAlbert{100, 2}: 196 expected edges out of 4950 pairs.
    double p = 196.0 / 4950.0;
    bool operator==(const ErdosRenyi&) const = default;
};

using InitMethod = std::variant<UniformRandom, BarabasiAlbert, ErdosRenyi>;

/// "uniform", "barabasi_albert" or "erdos_renyi".
std::string_view method_name(const InitMethod& m);
void validate(const InitMethod& m);

/// Edge probability giving ER(n) the same expected edge count as BA(n, m).
double matched_er_probability(std::size_t n, std::size_t m);

inline constexpr double default_keep_fraction = 0.8;

std::vector<double> uniform_weights(std::size_t count, const WeightRange& range,
                                    std::uint64_t seed);

struct NodeWeight {
    std::size_t node;
    std::size_t degree;
    double weight;
    bool kept;
};

/// Per-node degree -> weight table, ordered by (degree desc, node asc).
/// Degrees are min-max scaled onto the range; a flat degree sequence maps to
/// the midpoint. The first ceil(keep_fraction * n) rows are marked kept.
std::vector<NodeWeight> degree_weight_table(const Graph& g, const WeightRange& range,
                                            double keep_fraction = default_keep_fraction);

/// Kept weights of degree_weight_table, highest degree first.
std::vector<double> degrees_to_weights(const Graph& g, const WeightRange& range,
                                       double keep_fraction = default_keep_fraction);

/// Dispatches on the method. Graph methods fill `count` slots from the pool in
/// order; when count exceeds the pool, the pool is cycled starting from an
/// offset drawn from the seed.
std::vector<double> draw_weights(const InitMethod& method, std::size_t count,
                                 const WeightRange& range, std::uint64_t seed);

} // namespace spikesweep
