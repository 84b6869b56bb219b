#include "spikesweep/stdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spikesweep {

void StdpParams::validate() const
{
    if (!(a_plus >= 0.0) || !(a_minus >= 0.0)) throw std::invalid_argument("STDP amplitudes must be >= 0");
    if (!(tau_plus > 0.0) || !(tau_minus > 0.0)) throw std::invalid_argument("STDP time constants must be > 0");
    if (!(w_floor < w_ceiling)) throw std::invalid_argument("STDP requires w_floor < w_ceiling");
}

double stdp_window(double x, const StdpParams& p)
{
    if (x > 0.0) return p.a_plus * std::exp(-x / p.tau_plus);
    if (x < 0.0) return -p.a_minus * std::exp(x / p.tau_minus);
    return 0.0;
}

double pair_delta(std::span<const double> pre, std::span<const double> post, const StdpParams& p)
{
    double sum = 0.0;
    for (double tp : post) {
        for (double tf : pre) sum += stdp_window(tp - tf, p);
    }
    return sum;
}

double pair_delta(const SpikeTrain& pre, const SpikeTrain& post, const StdpParams& p)
{
    return pair_delta(pre.view(), post.view(), p);
}

void StdpTrace::decay_to(double t, const StdpParams& p)
{
    if (t > t_last_) {
        if (std::isfinite(t_last_)) {
            const double dt = t - t_last_;
            x_pre_ *= std::exp(-dt / p.tau_plus);
            x_post_ *= std::exp(-dt / p.tau_minus);
        }
        t_last_ = t;
    }
}

// A trace includes the +1 of an event at the current time; subtracting it
// keeps exact coincidences out of the pairing.
void StdpTrace::on_pre(double t, const StdpParams& p)
{
    decay_to(t, p);
    const double x_post = x_post_ - (t_last_post_ == t ? 1.0 : 0.0);
    weight_ = std::clamp(weight_ - p.a_minus * x_post, p.w_floor, p.w_ceiling);
    x_pre_ += 1.0;
    t_last_pre_ = t;
}

void StdpTrace::on_post(double t, const StdpParams& p)
{
    decay_to(t, p);
    const double x_pre = x_pre_ - (t_last_pre_ == t ? 1.0 : 0.0);
    weight_ = std::clamp(weight_ + p.a_plus * x_pre, p.w_floor, p.w_ceiling);
    x_post_ += 1.0;
    t_last_post_ = t;
}

std::vector<double> apply_online_stdp(double initial_weight, std::span<const StdpEvent> events,
                                      const StdpParams& params)
{
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].time < events[i - 1].time) {
            throw std::invalid_argument("apply_online_stdp: events must be time ordered");
        }
    }
    StdpTrace trace(initial_weight);
    std::vector<double> trajectory;
    trajectory.reserve(events.size());
    for (const auto& ev : events) {
        if (ev.kind == StdpEventKind::pre) {
            trace.on_pre(ev.time, params);
        } else {
            trace.on_post(ev.time, params);
        }
        trajectory.push_back(trace.weight());
    }
    return trajectory;
}

double online_delta(std::span<const double> pre, std::span<const double> post,
                    const StdpParams& params)
{
    std::vector<StdpEvent> events;
    events.reserve(pre.size() + post.size());
    for (double t : pre) events.push_back({t, StdpEventKind::pre});
    for (double t : post) events.push_back({t, StdpEventKind::post});
    std::stable_sort(events.begin(), events.end(),
                     [](const StdpEvent& a, const StdpEvent& b) { return a.time < b.time; });
    const auto traj = apply_online_stdp(0.0, events, params);
    return traj.empty() ? 0.0 : traj.back();
}

} // namespace spikesweep
