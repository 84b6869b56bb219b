#include "spikesweep/spike_train.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spikesweep {

SpikeTrain::SpikeTrain(std::vector<double> times, double t_start, double t_stop)
    : times_(std::move(times)), t_start_(t_start), t_stop_(t_stop)
{
    if (!std::isfinite(t_start) || !std::isfinite(t_stop) || !(t_start < t_stop)) {
        throw std::invalid_argument("spike train window must satisfy t_start < t_stop");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double t = times_[i];
        if (!std::isfinite(t) || t < t_start_ || t >= t_stop_) {
            throw std::invalid_argument("spike time " + std::to_string(t) + " outside window");
        }
        if (i > 0 && !(times_[i - 1] < t)) {
            throw std::invalid_argument("spike times must be strictly increasing");
        }
    }
}

std::vector<double> merge_population(std::span<const SpikeTrain> trains)
{
    std::vector<double> merged;
    for (const auto& tr : trains) {
        const auto mid = merged.size();
        merged.insert(merged.end(), tr.times().begin(), tr.times().end());
        std::inplace_merge(merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(mid),
                           merged.end());
    }
    return merged;
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out)
{
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(out);
}

} // namespace

SpikeTrain parse_spike_train(std::string_view text)
{
    std::vector<double> times;
    bool have_window = false;
    bool seen_data = false;
    double t_start = 0.0;
    double t_stop = 0.0;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '!') {
            if (seen_data) throw SpikeTrainFormatError(line_no, "!window must precede spike times");
            std::istringstream in{std::string(line)};
            std::string tag, a, b, extra;
            in >> tag >> a >> b;
            if (tag != "!window" || b.empty() || (in >> extra)) {
                throw SpikeTrainFormatError(line_no, "expected '!window <t_start> <t_stop>'");
            }
            if (!parse_double(a, t_start) || !parse_double(b, t_stop)) {
                throw SpikeTrainFormatError(line_no, "window bounds must be numbers");
            }
            if (!(t_start < t_stop)) throw SpikeTrainFormatError(line_no, "window requires t_start < t_stop");
            have_window = true;
            seen_data = true;
            continue;
        }
        seen_data = true;
        double t = 0.0;
        if (!parse_double(line, t)) {
            throw SpikeTrainFormatError(line_no, "not a spike time: '" + std::string(line) + "'");
        }
        if (!times.empty() && !(times.back() < t)) {
            throw SpikeTrainFormatError(line_no, "spike times must be strictly increasing");
        }
        if (have_window && (t < t_start || t >= t_stop)) {
            throw SpikeTrainFormatError(line_no, "spike time outside declared window");
        }
        times.push_back(t);
    }
    if (!have_window) {
        t_start = 0.0;
        t_stop = times.empty() ? 1.0 : times.back() + 1.0;
        if (!times.empty() && times.front() < 0.0) {
            throw SpikeTrainFormatError(line_no, "negative spike time without a window");
        }
    }
    return SpikeTrain(std::move(times), t_start, t_stop);
}

SpikeTrain read_spike_train(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spike train file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_spike_train(ss.str());
    } catch (const SpikeTrainFormatError& e) {
        throw SpikeTrainFormatError(e.line, path + ": " + e.what());
    }
}

std::string format_spike_train(const SpikeTrain& train)
{
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "!window %.17g %.17g\n", train.t_start(), train.t_stop());
    out += buf;
    for (double t : train.times()) {
        std::snprintf(buf, sizeof buf, "%.10g\n", t);
        out += buf;
    }
    return out;
}

void write_spike_train(const SpikeTrain& train, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write spike train file: " + path);
    out << format_spike_train(train);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace spikesweep
