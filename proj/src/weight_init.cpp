#include "spikesweep/weight_init.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spikesweep/rng.hpp"

namespace spikesweep {

void WeightRange::validate() const
{
    if (!std::isfinite(low) || !std::isfinite(high) || !(low >= 0.0) || !(low < high)) {
        throw std::invalid_argument("weight range requires 0 <= low < high");
    }
}

std::string_view method_name(const InitMethod& m)
{
    switch (m.index()) {
    case 0: return "uniform";
    case 1: return "barabasi_albert";
    default: return "erdos_renyi";
    }
}

void validate(const InitMethod& m)
{
    if (const auto* ba = std::get_if<BarabasiAlbert>(&m)) {
        if (ba->m < 1 || ba->m >= ba->n) throw std::invalid_argument("BA requires 1 <= m < n");
    } else if (const auto* er = std::get_if<ErdosRenyi>(&m)) {
        if (!(er->p >= 0.0 && er->p <= 1.0)) throw std::invalid_argument("ER requires 0 <= p <= 1");
        if (er->n < 2) throw std::invalid_argument("ER requires n >= 2");
    }
}

double matched_er_probability(std::size_t n, std::size_t m)
{
    if (n < 2 || m >= n) throw std::invalid_argument("matched_er_probability: need m < n, n >= 2");
    return static_cast<double>((n - m) * m) / (static_cast<double>(n * (n - 1)) / 2.0);
}

std::vector<double> uniform_weights(std::size_t count, const WeightRange& range, std::uint64_t seed)
{
    range.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(range.low, range.high);
    std::vector<double> w(count);
    for (auto& x : w) x = dist(rng);
    return w;
}

std::vector<NodeWeight> degree_weight_table(const Graph& g, const WeightRange& range,
                                            double keep_fraction)
{
    range.validate();
    if (g.node_count() < 2) throw std::invalid_argument("degree_weight_table: graph needs >= 2 nodes");
    if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
        throw std::invalid_argument("keep_fraction must be in (0, 1]");
    }
    const auto deg = g.degrees();
    const auto [dmin, dmax] = std::minmax_element(deg.begin(), deg.end());

    std::vector<NodeWeight> rows;
    rows.reserve(deg.size());
    for (std::size_t v = 0; v < deg.size(); ++v) {
        double w = range.midpoint();
        if (*dmax != *dmin) {
            const double frac = static_cast<double>(deg[v] - *dmin) / static_cast<double>(*dmax - *dmin);
            w = range.low + frac * (range.high - range.low);
        }
        rows.push_back({v, deg[v], w, false});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const NodeWeight& a, const NodeWeight& b) {
        return a.degree != b.degree ? a.degree > b.degree : a.node < b.node;
    });
    const auto keep = static_cast<std::size_t>(
        std::ceil(keep_fraction * static_cast<double>(rows.size()) - 1e-9));
    for (std::size_t i = 0; i < keep && i < rows.size(); ++i) rows[i].kept = true;
    return rows;
}

std::vector<double> degrees_to_weights(const Graph& g, const WeightRange& range, double keep_fraction)
{
    std::vector<double> pool;
    for (const auto& row : degree_weight_table(g, range, keep_fraction)) {
        if (row.kept) pool.push_back(row.weight);
    }
    return pool;
}

std::vector<double> draw_weights(const InitMethod& method, std::size_t count,
                                 const WeightRange& range, std::uint64_t seed)
{
    validate(method);
    range.validate();
    if (std::holds_alternative<UniformRandom>(method)) return uniform_weights(count, range, seed);
    if (count == 0) return {};

    const Graph g = std::holds_alternative<BarabasiAlbert>(method)
                        ? barabasi_albert(std::get<BarabasiAlbert>(method).n,
                                          std::get<BarabasiAlbert>(method).m, seed)
                        : erdos_renyi(std::get<ErdosRenyi>(method).n,
                                      std::get<ErdosRenyi>(method).p, seed);
    const auto pool = degrees_to_weights(g, range);
    if (pool.empty()) throw std::runtime_error("draw_weights: graph produced an empty weight pool");

    std::size_t offset = 0;
    if (count > pool.size()) {
        std::mt19937_64 rng(mix64(seed ^ 0x6379636c65ULL));
        offset = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    }
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = pool[(offset + k) % pool.size()];
    return out;
}

} // namespace spikesweep
