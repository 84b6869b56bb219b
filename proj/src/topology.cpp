#include "spikesweep/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>


namespace spikesweep {

std::string_view to_string(SynapseSign s)
{
    return s == SynapseSign::excitatory ? "excitatory" : "inhibitory";
}

std::string_view to_string(SynapseKind k) { return k == SynapseKind::fixed ? "static" : "stdp"; }

std::string_view to_string(LayerTag t)
{
    switch (t) {
    case LayerTag::input_liquid: return "input->liquid";
    case LayerTag::liquid_liquid: return "liquid->liquid";
    case LayerTag::liquid_readout: return "liquid->readout";
    case LayerTag::input_output_direct: return "input->output-direct";
    case LayerTag::interlayer: return "interlayer";
    }
    return "?";
}

bool is_reassignable(LayerTag t)
{
    return t == LayerTag::input_liquid || t == LayerTag::liquid_readout || t == LayerTag::interlayer;
}

void NetworkTopology::validate() const
{
    const auto n = neurons.size();
    for (const auto& p : neurons) p.validate();
    auto check_ids = [n](const std::vector<NeuronId>& ids, const char* what) {
        for (auto id : ids) {
            if (id >= n) throw std::invalid_argument(std::string(what) + " id out of range: " + std::to_string(id));
        }
    };
    check_ids(input_ids, "input");
    check_ids(output_ids, "output");
    check_ids(recorded_ids, "recorded");
    check_ids(liquid_ids, "liquid");
    for (auto id : input_ids) {
        if (std::find(output_ids.begin(), output_ids.end(), id) != output_ids.end()) {
            throw std::invalid_argument("neuron " + std::to_string(id) + " is both input and output");
        }
    }
    for (const auto& s : synapses) {
        if (s.pre >= n || s.post >= n) throw std::invalid_argument("synapse endpoint out of range");
        if (s.pre == s.post) throw std::invalid_argument("synapse with pre == post");
        if (!(s.weight >= 0.0) || !std::isfinite(s.weight)) throw std::invalid_argument("synapse weight must be >= 0");
        if (!(s.delay > 0.0) || !std::isfinite(s.delay)) throw std::invalid_argument("synapse delay must be > 0");
        if (s.tag == LayerTag::liquid_liquid && s.kind != SynapseKind::fixed) {
            throw std::invalid_argument("liquid->liquid synapses must be static");
        }
    }
}

NetworkTopology build_layered(const std::vector<std::size_t>& layer_sizes, const InitMethod& init,
                              const WeightRange& range, std::uint64_t seed, const LifParams& lif)
{
    if (layer_sizes.size() < 2) throw std::invalid_argument("layered network needs >= 2 layers");
    if (std::any_of(layer_sizes.begin(), layer_sizes.end(), [](auto s) { return s == 0; })) {
        throw std::invalid_argument("layer sizes must be >= 1");
    }
    lif.validate();
    NetworkTopology net;
    const auto total = std::accumulate(layer_sizes.begin(), layer_sizes.end(), std::size_t{0});
    net.neurons.assign(total, lif);

    std::size_t first = 0;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const std::size_t next = first + layer_sizes[l];
        for (std::size_t i = 0; i < layer_sizes[l]; ++i) {
            for (std::size_t j = 0; j < layer_sizes[l + 1]; ++j) {
                net.synapses.push_back({static_cast<NeuronId>(first + i),
                                        static_cast<NeuronId>(next + j), 0.0,
                                        SynapseSign::excitatory, 1.0, SynapseKind::stdp,
                                        LayerTag::interlayer});
            }
        }
        first = next;
    }
    for (std::size_t i = 0; i < layer_sizes.front(); ++i) net.input_ids.push_back(static_cast<NeuronId>(i));
    for (std::size_t i = total - layer_sizes.back(); i < total; ++i) net.output_ids.push_back(static_cast<NeuronId>(i));
    net.recorded_ids = net.input_ids;
    net.recorded_ids.insert(net.recorded_ids.end(), net.output_ids.begin(), net.output_ids.end());

    return reassign_interlayer_weights(net, init, range, seed);
}

std::size_t LsmOptions::inhibitory_count() const
{
    if (n_inh) return *n_inh;
    return std::max<std::size_t>(1, n_liquid * k_rec / 5);
}

NetworkTopology build_lsm(const LsmOptions& opts, const InitMethod& init, const WeightRange& range,
                          std::uint64_t liquid_seed, std::uint64_t epoch_seed, const LifParams& lif)
{
    if (opts.n_in == 0 || opts.n_liquid < 2 || opts.n_out == 0) {
        throw std::invalid_argument("LSM needs n_in >= 1, n_liquid >= 2, n_out >= 1");
    }
    if (opts.k_rec < 1 || opts.k_rec >= opts.n_liquid) {
        throw std::invalid_argument("LSM requires 1 <= k_rec < n_liquid");
    }
    const std::size_t n_rec = opts.n_liquid * opts.k_rec;
    const std::size_t n_inh = opts.inhibitory_count();
    if (n_inh > n_rec) throw std::invalid_argument("n_inh exceeds the number of liquid synapses");
    lif.validate();
    range.validate();

    NetworkTopology net;
    net.neurons.assign(opts.n_in + opts.n_liquid + opts.n_out, lif);
    const auto liquid0 = static_cast<NeuronId>(opts.n_in);
    const auto out0 = static_cast<NeuronId>(opts.n_in + opts.n_liquid);
    for (std::size_t i = 0; i < opts.n_in; ++i) net.input_ids.push_back(static_cast<NeuronId>(i));
    for (std::size_t i = 0; i < opts.n_liquid; ++i) net.liquid_ids.push_back(liquid0 + static_cast<NeuronId>(i));
    for (std::size_t i = 0; i < opts.n_out; ++i) net.output_ids.push_back(out0 + static_cast<NeuronId>(i));
    net.recorded_ids = net.input_ids;
    net.recorded_ids.insert(net.recorded_ids.end(), net.output_ids.begin(), net.output_ids.end());

    // Liquid: k_rec distinct targets per neuron, weights uniform in range.
    std::mt19937_64 rng(liquid_seed);
    std::uniform_real_distribution<double> wdist(range.low, range.high);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < opts.n_liquid; ++i) {
        others.clear();
        for (std::size_t j = 0; j < opts.n_liquid; ++j)
            if (j != i) others.push_back(j);
        for (std::size_t k = 0; k < opts.k_rec; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, others.size() - 1);
            std::swap(others[k], others[pick(rng)]);
            net.synapses.push_back({liquid0 + static_cast<NeuronId>(i),
                                    liquid0 + static_cast<NeuronId>(others[k]), wdist(rng),
                                    SynapseSign::excitatory, 1.0, SynapseKind::fixed,
                                    LayerTag::liquid_liquid});
        }
    }
    std::vector<std::size_t> order(n_rec);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < n_inh; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, n_rec - 1);
        std::swap(order[k], order[pick(rng)]);
        net.synapses[order[k]].sign = SynapseSign::inhibitory;
    }

    for (std::size_t i = 0; i < opts.n_in; ++i)
        for (std::size_t j = 0; j < opts.n_liquid; ++j)
            net.synapses.push_back({static_cast<NeuronId>(i), liquid0 + static_cast<NeuronId>(j), 0.0,
                                    SynapseSign::excitatory, 1.0, SynapseKind::stdp,
                                    LayerTag::input_liquid});
    for (std::size_t j = 0; j < opts.n_liquid; ++j)
        for (std::size_t o = 0; o < opts.n_out; ++o)
            net.synapses.push_back({liquid0 + static_cast<NeuronId>(j), out0 + static_cast<NeuronId>(o), 0.0,
                                    SynapseSign::excitatory, 1.0, SynapseKind::stdp,
                                    LayerTag::liquid_readout});

    const double w_direct = opts.w_direct.value_or(2.0 * (lif.u_th - lif.u_rest) / lif.kappa);
    if (!(w_direct >= 0.0) || !std::isfinite(w_direct)) throw std::invalid_argument("w_direct must be finite and >= 0");
    for (std::size_t i = 0; i < opts.n_in; ++i) {
        net.synapses.push_back({static_cast<NeuronId>(i), out0 + static_cast<NeuronId>(i % opts.n_out),
                                w_direct, SynapseSign::excitatory, 1.0, SynapseKind::fixed,
                                LayerTag::input_output_direct});
    }
    return reassign_interlayer_weights(net, init, range, epoch_seed);
}

NetworkTopology reassign_interlayer_weights(const NetworkTopology& topology, const InitMethod& init,
                                            const WeightRange& range, std::uint64_t epoch_seed)
{
    NetworkTopology out = topology;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < out.synapses.size(); ++i) {
        if (is_reassignable(out.synapses[i].tag)) slots.push_back(i);
    }
    const auto w = draw_weights(init, slots.size(), range, epoch_seed);
    for (std::size_t k = 0; k < slots.size(); ++k) out.synapses[slots[k]].weight = w[k];
    return out;
}

std::string format_topology_csv(const NetworkTopology& topology)
{
    std::string out = "pre,post,weight,sign,kind,delay,layer_tag\n";
    char buf[256];
    for (const auto& s : topology.synapses) {
        std::snprintf(buf, sizeof buf, "%u,%u,%.17g,%s,%s,%.17g,%s\n", s.pre, s.post, s.weight,
                      std::string(to_string(s.sign)).c_str(), std::string(to_string(s.kind)).c_str(),
                      s.delay, std::string(to_string(s.tag)).c_str());
        out += buf;
    }
    return out;
}

} // namespace spikesweep
