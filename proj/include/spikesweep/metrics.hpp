#pragma once

#include <span>
#include <vector>

#include "spikesweep/spike_train.hpp"

namespace spikesweep {

/// Victor-Purpura edit distance: unit insert/delete cost, shift cost q * |dt|.
/// Inputs are sorted spike times; repeated times are allowed.
double victor_purpura(std::span<const double> a, std::span<const double> b, double q);
double victor_purpura(const SpikeTrain& a, const SpikeTrain& b, double q);

/// van Rossum distance with the causal kernel exp(-t/tau):
///   D^2 = (1/tau) * integral (f - g)^2 dt,
/// so a single spike against an empty train gives sqrt(1/2). Linear-time
/// sweep over the merged spike times.
double van_rossum(std::span<const double> a, std::span<const double> b, double tau);
double van_rossum(const SpikeTrain& a, const SpikeTrain& b, double tau);

/// Same distance from the O((n+m)^2) pair sums of exp(-|dt|/tau).
double van_rossum_pairwise(std::span<const double> a, std::span<const double> b, double tau);

enum class Metric { victor_purpura, van_rossum };

struct MetricSpec {
    Metric metric = Metric::victor_purpura;
    // q (1/ms) for Victor-Purpura, tau (ms) for van Rossum.
    double parameter = 1.0;
};

double distance(std::span<const double> a, std::span<const double> b, const MetricSpec& spec);

/// Row-major n x n symmetric matrix with zero diagonal.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> values;
    // Set when the trains do not share one observation window.
    bool mixed_windows = false;

    double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

DistanceMatrix distance_matrix_serial(std::span<const SpikeTrain> trains, const MetricSpec& spec);
DistanceMatrix distance_matrix(std::span<const SpikeTrain> trains, const MetricSpec& spec,
                               int n_threads = 0);

} // namespace spikesweep
