#pragma once

#include <cstdint>
#include <vector>

namespace spikesweep {

enum class StimulusKind { regular, poisson };

/// Drive applied to the input population. Each generator event injects a
/// current pulse of `amplitude` pA lasting one time step (75 nA over 0.1 ms
/// moves a 250 pF membrane by 30 mV, twice the default threshold gap).
struct StimulusSpec {
    StimulusKind kind = StimulusKind::regular;
    double rate = 25.0;
    std::uint64_t seed = 0;
    double amplitude = 75000.0;
    // Regular drive only: input neuron i is phase-shifted by i / n_inputs of a period.
    bool stagger = true;

    void validate() const;
    bool operator==(const StimulusSpec&) const = default;
};

/// Event times (ms) on the dt grid within [0, duration).
/// `phase` shifts a regular generator; `seed` overrides spec.seed for Poisson.
std::vector<double> generate_stimulus(const StimulusSpec& spec, double duration, double dt,
                                      double phase = 0.0);
std::vector<double> generate_stimulus(const StimulusSpec& spec, double duration, double dt,
                                      double phase, std::uint64_t seed);

} // namespace spikesweep
