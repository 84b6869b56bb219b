#pragma once

namespace spikesweep {

/// Membrane constants of a leaky integrate-and-fire neuron.
///
///   du/dt = (u_rest - u) / tau_m + I / c_m
///
/// Units: mV, ms, pF; I in pA so that I / c_m is in mV/ms. A synaptic event of
/// weight w moves the membrane by kappa * w mV. Setting u_th to +infinity
/// disables firing.
struct LifParams {
    double u_rest = -70.0;
    double u_th = -55.0;
    double u_reset = -70.0;
    double tau_m = 10.0;
    double c_m = 250.0;
    double t_ref = 2.0;
    double kappa = 0.05;

    void validate() const;
    bool operator==(const LifParams&) const = default;
};

struct NeuronState {
    double u = -70.0;
    double refractory_until = -1.0e300;

    static NeuronState at_rest(const LifParams& p) { return {p.u_rest, -1.0e300}; }
    bool operator==(const NeuronState&) const = default;
};

struct StepResult {
    NeuronState state;
    bool spiked = false;
};

/// One forward-Euler step starting at time `now`. Refractoriness is compared
/// on the dt grid: a neuron that fired at t is silent for steps starting
/// before t + t_ref. Throws std::invalid_argument on non-finite input.
StepResult lif_step(const NeuronState& state, const LifParams& params, double input_current,
                    double synaptic_jump, double dt, double now);

namespace detail {

// Unchecked kernel shared by lif_step and the simulator.
inline bool lif_advance(NeuronState& s, const LifParams& p, double input_current,
                        double synaptic_jump, double dt, double now)
{
    if (now < s.refractory_until - 0.5 * dt) {
        s.u = p.u_reset;
        return false;
    }
    s.u += dt * ((p.u_rest - s.u) / p.tau_m + input_current / p.c_m) + synaptic_jump;
    if (s.u >= p.u_th) {
        s.u = p.u_reset;
        s.refractory_until = now + p.t_ref;
        return true;
    }
    return false;
}

} // namespace detail

} // namespace spikesweep
