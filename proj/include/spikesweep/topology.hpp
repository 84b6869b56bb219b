#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spikesweep/lif.hpp"
#include "spikesweep/weight_init.hpp"

namespace spikesweep {

using NeuronId = std::uint32_t;

enum class SynapseSign { excitatory, inhibitory };
enum class SynapseKind { fixed, stdp };
enum class LayerTag { input_liquid, liquid_liquid, liquid_readout, input_output_direct, interlayer };

std::string_view to_string(SynapseSign s);
std::string_view to_string(SynapseKind k);
std::string_view to_string(LayerTag t);

struct SynapseSpec {
    NeuronId pre = 0;
    NeuronId post = 0;
    double weight = 0.0;
    SynapseSign sign = SynapseSign::excitatory;
    double delay = 1.0;
    SynapseKind kind = SynapseKind::stdp;
    LayerTag tag = LayerTag::interlayer;

    bool operator==(const SynapseSpec&) const = default;
};

/// Immutable network snapshot: neurons, synapses and designated populations.
struct NetworkTopology {
    std::vector<LifParams> neurons;
    std::vector<SynapseSpec> synapses;
    std::vector<NeuronId> input_ids;
    std::vector<NeuronId> output_ids;
    std::vector<NeuronId> recorded_ids;
    std::vector<NeuronId> liquid_ids;

    std::size_t size() const { return neurons.size(); }
    void validate() const;
    bool operator==(const NetworkTopology&) const = default;
};

/// True for synapses whose weights are redrawn every epoch.
bool is_reassignable(LayerTag t);

/// Fully connected feed-forward layers. First layer receives the stimulus.
NetworkTopology build_layered(const std::vector<std::size_t>& layer_sizes, const InitMethod& init,
                              const WeightRange& range, std::uint64_t seed,
                              const LifParams& lif = {});

struct LsmOptions {
    std::size_t n_in = 2;
    std::size_t n_liquid = 8;
    std::size_t n_out = 2;
    std::size_t k_rec = 2;
    // Default: 20% of the recurrent synapses, at least one.
    std::optional<std::size_t> n_inh;
    // Default: 2 * (u_th - u_rest) / kappa.
    std::optional<double> w_direct;

    std::size_t inhibitory_count() const;
    bool operator==(const LsmOptions&) const = default;
};

/// Input, fixed random liquid, read-out, plus direct input i -> output i synapses.
/// Liquid wiring and weights depend only on liquid_seed.
NetworkTopology build_lsm(const LsmOptions& opts, const InitMethod& init, const WeightRange& range,
                          std::uint64_t liquid_seed, std::uint64_t epoch_seed,
                          const LifParams& lif = {});

/// Redraws the weights of every reassignable synapse (in synapse order).
NetworkTopology reassign_interlayer_weights(const NetworkTopology& topology,
                                            const InitMethod& init, const WeightRange& range,
                                            std::uint64_t epoch_seed);

/// CSV dump: pre,post,weight,sign,kind,delay,layer_tag
std::string format_topology_csv(const NetworkTopology& topology);

} // namespace spikesweep
