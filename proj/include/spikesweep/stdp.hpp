#pragma once

#include <limits>
#include <span>

#include "spikesweep/spike_train.hpp"

namespace spikesweep {

/// Additive pair-based STDP with hard weight bounds.
struct StdpParams {
    double a_plus = 0.1;
    double a_minus = 0.1;
    double tau_plus = 10.0;
    double tau_minus = 10.0;
    double w_floor = 0.0;
    double w_ceiling = std::numeric_limits<double>::infinity();

    void validate() const;
    bool operator==(const StdpParams&) const = default;
};

/// Learning window for x = t_post - t_pre. Exact coincidence gives 0.
double stdp_window(double x, const StdpParams& params);

/// All-to-all pair sum over every (pre, post) pair, unclipped.
double pair_delta(std::span<const double> pre, std::span<const double> post,
                  const StdpParams& params);
double pair_delta(const SpikeTrain& pre, const SpikeTrain& post, const StdpParams& params);

/// Online form of pair_delta: exponentially decaying pre/post traces updated
/// lazily at each event. Same-time pre/post pairs contribute nothing, so the
/// result does not depend on the order in which coincident events arrive.
class StdpTrace {
public:
    explicit StdpTrace(double weight = 0.0) : weight_(weight) {}

    double weight() const { return weight_; }
    void set_weight(double w) { weight_ = w; }

    void on_pre(double t, const StdpParams& p);
    void on_post(double t, const StdpParams& p);

private:
    void decay_to(double t, const StdpParams& p);

    double weight_;
    double x_pre_ = 0.0;
    double x_post_ = 0.0;
    double t_last_ = -std::numeric_limits<double>::infinity();
    double t_last_pre_ = -std::numeric_limits<double>::infinity();
    double t_last_post_ = -std::numeric_limits<double>::infinity();
};

enum class StdpEventKind { pre, post };

struct StdpEvent {
    double time;
    StdpEventKind kind;
};

/// Replays time-ordered events through a StdpTrace. Returns the weight after
/// every event (trajectory.back() is the final weight; empty input -> empty).
std::vector<double> apply_online_stdp(double initial_weight, std::span<const StdpEvent> events,
                                      const StdpParams& params);

/// Convenience: merge two trains into an event list and replay it.
double online_delta(std::span<const double> pre, std::span<const double> post,
                    const StdpParams& params);

} // namespace spikesweep
