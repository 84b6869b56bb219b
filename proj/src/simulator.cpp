#include "spikesweep/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "spikesweep/rng.hpp"

namespace spikesweep {

namespace {

// Compressed adjacency: ids of synapses per neuron.
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> items;

    std::span<const std::uint32_t> row(std::size_t i) const
    {
        return {items.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
};

template <class KeyFn, class Pred>
Csr build_csr(std::size_t n, const std::vector<SynapseSpec>& syn, KeyFn key, Pred keep)
{
    Csr c;
    c.offsets.assign(n + 1, 0);
    for (const auto& s : syn)
        if (keep(s)) ++c.offsets[key(s) + 1];
    for (std::size_t i = 0; i < n; ++i) c.offsets[i + 1] += c.offsets[i];
    c.items.resize(c.offsets[n]);
    auto fill = c.offsets;
    for (std::size_t k = 0; k < syn.size(); ++k)
        if (keep(syn[k])) c.items[fill[key(syn[k])]++] = static_cast<std::uint32_t>(k);
    return c;
}

} // namespace

SimResult simulate(const NetworkTopology& topology, const StimulusSpec& stimulus,
                   const SimOptions& options)
{
    const double dt = options.dt;
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("simulate: dt must be > 0");
    if (!(options.duration > 0.0) || !std::isfinite(options.duration)) {
        throw std::invalid_argument("simulate: duration must be > 0");
    }
    topology.validate();
    stimulus.validate();
    if (options.plasticity) options.stdp.validate();

    const std::size_t n = topology.size();
    const auto& syn = topology.synapses;

    std::vector<std::int64_t> delay_steps(syn.size());
    std::int64_t max_delay = 1;
    for (std::size_t k = 0; k < syn.size(); ++k) {
        const auto ds = static_cast<std::int64_t>(std::llround(syn[k].delay / dt));
        if (ds < 1 || std::abs(static_cast<double>(ds) * dt - syn[k].delay) > 1e-9 * std::max(1.0, syn[k].delay)) {
            throw std::invalid_argument("synapse delay " + std::to_string(syn[k].delay) +
                                        " ms is not a positive multiple of dt");
        }
        delay_steps[k] = ds;
        max_delay = std::max(max_delay, ds);
    }

    const auto n_steps = static_cast<std::int64_t>(std::ceil(options.duration / dt - 1e-9));
    const Csr outgoing = build_csr(n, syn, [](const SynapseSpec& s) { return s.pre; },
                                   [](const SynapseSpec&) { return true; });
    const bool learn = options.plasticity;
    const Csr plastic_in = build_csr(n, syn, [](const SynapseSpec& s) { return s.post; },
                                     [learn](const SynapseSpec& s) { return learn && s.kind == SynapseKind::stdp; });

    std::vector<StdpTrace> traces;
    traces.reserve(syn.size());
    for (const auto& s : syn) traces.emplace_back(s.weight);
    auto plastic = [&](std::size_t k) { return learn && syn[k].kind == SynapseKind::stdp; };

    // Stimulus schedule: per input neuron, sorted event steps.
    const std::size_t n_inputs = topology.input_ids.size();
    std::vector<std::vector<std::int64_t>> stim_steps(n_inputs);
    if (stimulus.amplitude > 0.0) {
        const double period = 1000.0 / stimulus.rate;
        for (std::size_t i = 0; i < n_inputs; ++i) {
            double phase = 0.0;
            std::uint64_t seed = stimulus.seed;
            if (stimulus.kind == StimulusKind::regular && stimulus.stagger) {
                phase = period * static_cast<double>(i) / static_cast<double>(n_inputs);
            }
            if (stimulus.kind == StimulusKind::poisson) seed = hash64({stimulus.seed, options.seed, i});
            for (double t : generate_stimulus(stimulus, options.duration, dt, phase, seed)) {
                stim_steps[i].push_back(static_cast<std::int64_t>(std::llround(t / dt)));
            }
        }
    }
    std::vector<std::size_t> stim_cursor(n_inputs, 0);

    std::vector<NeuronState> state(n);
    for (std::size_t i = 0; i < n; ++i) state[i] = NeuronState::at_rest(topology.neurons[i]);
    std::vector<double> jump(n, 0.0);
    std::vector<double> current(n, 0.0);
    std::vector<std::vector<double>> spikes(n);
    std::vector<std::vector<std::uint32_t>> ring(static_cast<std::size_t>(max_delay + 1));

    for (std::int64_t step = 0; step < n_steps; ++step) {
        const double now = static_cast<double>(step) * dt;

        auto& due = ring[static_cast<std::size_t>(step % (max_delay + 1))];
        for (auto k : due) {
            const auto& s = syn[k];
            const double w = traces[k].weight();
            const double sign = s.sign == SynapseSign::excitatory ? 1.0 : -1.0;
            jump[s.post] += topology.neurons[s.post].kappa * w * sign;
            if (plastic(k)) traces[k].on_pre(now, options.stdp);
        }
        due.clear();

        for (std::size_t i = 0; i < n_inputs; ++i) {
            auto& c = stim_cursor[i];
            if (c < stim_steps[i].size() && stim_steps[i][c] == step) {
                current[topology.input_ids[i]] += stimulus.amplitude;
                ++c;
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            const bool fired = detail::lif_advance(state[i], topology.neurons[i], current[i], jump[i], dt, now);
            jump[i] = 0.0;
            current[i] = 0.0;
            if (!fired) continue;
            spikes[i].push_back(now);
            for (auto k : plastic_in.row(i)) traces[k].on_post(now, options.stdp);
            for (auto k : outgoing.row(i)) {
                ring[static_cast<std::size_t>((step + delay_steps[k]) % (max_delay + 1))].push_back(k);
            }
        }
    }

    SimResult result;
    result.duration = options.duration;
    for (auto id : topology.recorded_ids) {
        result.recorded.emplace(id, SpikeTrain(spikes[id], 0.0, options.duration));
    }
    result.final_weights.reserve(syn.size());
    for (const auto& t : traces) result.final_weights.push_back(t.weight());
    return result;
}

} // namespace spikesweep
