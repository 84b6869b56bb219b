#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spikesweep {

/// Spike times of one neuron (ms) over the half-open window [t_start, t_stop).
/// Construction enforces strict ordering and window membership.
class SpikeTrain {
public:
    SpikeTrain() = default;
    SpikeTrain(std::vector<double> times, double t_start, double t_stop);

    const std::vector<double>& times() const { return times_; }
    std::span<const double> view() const { return times_; }
    double t_start() const { return t_start_; }
    double t_stop() const { return t_stop_; }
    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }

    bool operator==(const SpikeTrain&) const = default;

private:
    std::vector<double> times_;
    double t_start_ = 0.0;
    double t_stop_ = 1.0;
};

/// Merge several trains into one population train. Coincident spikes from
/// different neurons are all kept, so the result is sorted but may repeat.
std::vector<double> merge_population(std::span<const SpikeTrain> trains);

struct SpikeTrainFormatError : std::runtime_error {
    SpikeTrainFormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Text format: one time per line, '#' comments, optional leading
// "!window <t_start> <t_stop>". Without a window: [0, last + 1).
SpikeTrain parse_spike_train(std::string_view text);
SpikeTrain read_spike_train(const std::string& path);
std::string format_spike_train(const SpikeTrain& train);
void write_spike_train(const SpikeTrain& train, const std::string& path);

} // namespace spikesweep
