#include "spikesweep/stimulus.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace spikesweep {

void StimulusSpec::validate() const
{
    if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("stimulus rate must be > 0");
    // Zero amplitude is accepted and means "no drive".
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
        throw std::invalid_argument("stimulus amplitude must be >= 0");
    }
}

std::vector<double> generate_stimulus(const StimulusSpec& spec, double duration, double dt,
                                      double phase)
{
    return generate_stimulus(spec, duration, dt, phase, spec.seed);
}

std::vector<double> generate_stimulus(const StimulusSpec& spec, double duration, double dt,
                                      double phase, std::uint64_t seed)
{
    spec.validate();
    if (!(duration > 0.0) || !(dt > 0.0)) {
        throw std::invalid_argument("stimulus needs duration > 0 and dt > 0");
    }
    const double period = 1000.0 / spec.rate;
    if (spec.kind == StimulusKind::regular && period < dt) {
        throw std::invalid_argument("stimulus rate exceeds one event per time step");
    }
    const double expected = spec.rate * duration / 1000.0;
    const double n_steps = std::ceil(duration / dt);
    if (expected > n_steps || n_steps > 1e12) {
        throw std::invalid_argument("stimulus event count overflows the time grid");
    }

    std::vector<double> events;
    std::int64_t last_step = -1;
    auto push = [&](double t) {
        const auto step = static_cast<std::int64_t>(std::llround(t / dt));
        const double snapped = static_cast<double>(step) * dt;
        if (snapped >= duration || step <= last_step) return;
        events.push_back(snapped);
        last_step = step;
    };

    if (spec.kind == StimulusKind::regular) {
        for (std::int64_t k = 0;; ++k) {
            const double t = phase + static_cast<double>(k) * period;
            if (t >= duration) break;
            push(t);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::exponential_distribution<double> gap(spec.rate / 1000.0);
        double t = phase;
        for (;;) {
            t += gap(rng);
            if (t >= duration) break;
            push(t);
        }
    }
    return events;
}

} // namespace spikesweep
