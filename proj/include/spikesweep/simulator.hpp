#pragma once

#include <cstdint>
#include <map>

#include "spikesweep/spike_train.hpp"
#include "spikesweep/stdp.hpp"
#include "spikesweep/stimulus.hpp"
#include "spikesweep/topology.hpp"

namespace spikesweep {

struct SimResult {
    std::map<NeuronId, SpikeTrain> recorded;
    double duration = 0.0;
    // Final weights in synapse order (differs from the topology only under plasticity).
    std::vector<double> final_weights;

    bool operator==(const SimResult&) const = default;
};

struct SimOptions {
    double duration = 1000.0;
    double dt = 0.1;
    std::uint64_t seed = 0;
    bool plasticity = true;
    StdpParams stdp{};
};

/// Clock-driven run. Per step: deliver due synaptic events as membrane jumps
/// kappa * w * sign, apply stimulus pulses to inputs, advance every neuron,
/// then schedule spikes on outgoing synapses. STDP synapses learn online when
/// plasticity is enabled. Spikes are stamped with the start time of the step
/// in which the threshold is crossed.
SimResult simulate(const NetworkTopology& topology, const StimulusSpec& stimulus,
                   const SimOptions& options);

} // namespace spikesweep
