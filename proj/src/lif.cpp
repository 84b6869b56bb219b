#include "spikesweep/lif.hpp"

#include <cmath>
#include <stdexcept>

namespace spikesweep {

void LifParams::validate() const
{
    if (!(tau_m > 0.0) || !(c_m > 0.0) || !(t_ref >= 0.0)) {
        throw std::invalid_argument("LIF params require tau_m > 0, c_m > 0, t_ref >= 0");
    }
    if (!std::isfinite(u_rest) || !std::isfinite(u_reset) || std::isnan(u_th)) {
        throw std::invalid_argument("LIF potentials must be finite (u_th may be +inf)");
    }
    if (!(u_reset <= u_rest && u_rest < u_th)) {
        throw std::invalid_argument("LIF params require u_reset <= u_rest < u_th");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("LIF params require kappa > 0");
    }
}

StepResult lif_step(const NeuronState& state, const LifParams& params, double input_current,
                    double synaptic_jump, double dt, double now)
{
    if (!std::isfinite(state.u) || std::isnan(state.refractory_until) ||
        !std::isfinite(input_current) || !std::isfinite(synaptic_jump) || !std::isfinite(now) ||
        !std::isfinite(dt)) {
        throw std::invalid_argument("lif_step: non-finite input");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("lif_step: dt must be positive");
    StepResult r{state, false};
    r.spiked = detail::lif_advance(r.state, params, input_current, synaptic_jump, dt, now);
    return r;
}

} // namespace spikesweep
