#include "spikesweep/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spikesweep/parallel.hpp"

namespace spikesweep {

double victor_purpura(std::span<const double> a, std::span<const double> b, double q)
{
    if (!(q >= 0.0)) throw std::invalid_argument("victor_purpura: q must be >= 0");
    if (a.empty()) return static_cast<double>(b.size());
    if (b.empty()) return static_cast<double>(a.size());

    // Two rolling rows of G[i][j] over b.
    std::vector<double> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<double>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<double>(i);
        const double ai = a[i - 1];
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double shift = prev[j - 1] + q * std::abs(ai - b[j - 1]);
            const double edit = std::min(prev[j], cur[j - 1]) + 1.0;
            cur[j] = shift <= edit ? shift : edit;
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double victor_purpura(const SpikeTrain& a, const SpikeTrain& b, double q)
{
    return victor_purpura(a.view(), b.view(), q);
}

namespace {

void check_tau(double tau)
{
    if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("van_rossum: tau must be > 0");
}

// Running difference f - g sampled at every spike time; between spikes it
// decays as exp(-t/tau), so each gap integrates in closed form. Identical
// trains cancel exactly at every step.
double squared_distance(std::span<const double> a, std::span<const double> b, double tau)
{
    double integral = 0.0;
    double diff = 0.0;
    double t_prev = 0.0;
    bool started = false;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const double t = (j == b.size() || (i < a.size() && a[i] <= b[j])) ? a[i] : b[j];
        if (started) {
            const double decay = std::exp(-(t - t_prev) / tau);
            integral += diff * diff * 0.5 * tau * (1.0 - decay * decay);
            diff *= decay;
        }
        for (; i < a.size() && a[i] == t; ++i) diff += 1.0;
        for (; j < b.size() && b[j] == t; ++j) diff -= 1.0;
        t_prev = t;
        started = true;
    }
    integral += diff * diff * 0.5 * tau;
    return integral / tau;
}

double finish(double d2) { return std::sqrt(std::max(0.0, d2)); }

} // namespace

double van_rossum(std::span<const double> a, std::span<const double> b, double tau)
{
    check_tau(tau);
    return std::sqrt(squared_distance(a, b, tau));
}

double van_rossum(const SpikeTrain& a, const SpikeTrain& b, double tau)
{
    return van_rossum(a.view(), b.view(), tau);
}

double van_rossum_pairwise(std::span<const double> a, std::span<const double> b, double tau)
{
    check_tau(tau);
    auto sum = [tau](std::span<const double> x, std::span<const double> y) {
        double s = 0.0;
        for (double xi : x)
            for (double yj : y) s += std::exp(-std::abs(xi - yj) / tau);
        return s;
    };
    return finish(0.5 * (sum(a, a) + sum(b, b) - 2.0 * sum(a, b)));
}

double distance(std::span<const double> a, std::span<const double> b, const MetricSpec& spec)
{
    return spec.metric == Metric::victor_purpura ? victor_purpura(a, b, spec.parameter)
                                                 : van_rossum(a, b, spec.parameter);
}

namespace {

DistanceMatrix empty_matrix(std::span<const SpikeTrain> trains)
{
    if (trains.empty()) throw std::invalid_argument("distance_matrix: need at least one train");
    DistanceMatrix m;
    m.n = trains.size();
    m.values.assign(m.n * m.n, 0.0);
    for (const auto& t : trains) {
        if (t.t_start() != trains[0].t_start() || t.t_stop() != trains[0].t_stop()) {
            m.mixed_windows = true;
        }
    }
    return m;
}

} // namespace

DistanceMatrix distance_matrix_serial(std::span<const SpikeTrain> trains, const MetricSpec& spec)
{
    auto m = empty_matrix(trains);
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = i + 1; j < m.n; ++j) {
            const double d = distance(trains[i].view(), trains[j].view(), spec);
            m.values[i * m.n + j] = d;
            m.values[j * m.n + i] = d;
        }
    }
    return m;
}

DistanceMatrix distance_matrix(std::span<const SpikeTrain> trains, const MetricSpec& spec,
                               int n_threads)
{
    auto m = empty_matrix(trains);
    const std::size_t n = m.n;
    const auto n_pairs = static_cast<std::ptrdiff_t>(n * (n - 1) / 2);
    if (n_threads <= 0) n_threads = max_threads();
    parallel_for(0, n_pairs, n_threads, [&](std::ptrdiff_t p) {
        // Unrank p into (i, j), i < j, row by row.
        std::size_t i = 0;
        auto rem = static_cast<std::size_t>(p);
        while (rem >= n - 1 - i) {
            rem -= n - 1 - i;
            ++i;
        }
        const std::size_t j = i + 1 + rem;
        const double d = distance(trains[i].view(), trains[j].view(), spec);
        m.values[i * n + j] = d;
        m.values[j * n + i] = d;
    });
    return m;
}

} // namespace spikesweep
