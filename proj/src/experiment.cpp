#include "spikesweep/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spikesweep/metrics.hpp"
#include "spikesweep/parallel.hpp"
#include "spikesweep/rng.hpp"
#include "spikesweep/simulator.hpp"

namespace spikesweep {

void SweepConfig::validate() const
{
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
    if (!(duration > 0.0) || !std::isfinite(duration)) throw std::invalid_argument("duration must be > 0");
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (ranges.empty()) throw std::invalid_argument("at least one weight range is required");
    if (methods.empty()) throw std::invalid_argument("at least one init method is required");
    if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
    if (!(vp_q >= 0.0)) throw std::invalid_argument("vp_q must be >= 0");
    if (!(vr_tau > 0.0)) throw std::invalid_argument("vr_tau must be > 0");
    stimulus.validate();
    lif.validate();
    for (const auto& r : ranges) r.validate();
    for (const auto& m : methods) spikesweep::validate(m);
    if (topology == TopologyKind::layered) {
        if (layers.size() < 2) throw std::invalid_argument("layered topology needs >= 2 layers");
        for (auto s : layers)
            if (s == 0) throw std::invalid_argument("layer sizes must be >= 1");
    }
    StdpParams probe = stdp;
    probe.w_ceiling = stdp_w_ceiling.value_or(std::numeric_limits<double>::infinity());
    probe.validate();
}

std::uint64_t epoch_seed(std::uint64_t seed, std::uint64_t epoch, std::string_view method,
                         const WeightRange& range)
{
    std::uint64_t tag = 0xcbf29ce484222325ULL;  // FNV-1a of the method name
    for (char c : method) tag = (tag ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return hash64({seed, epoch, tag, bits_of(range.low), bits_of(range.high)});
}

NetworkTopology build_cell_topology(const SweepConfig& config, const InitMethod& method,
                                    const WeightRange& range, std::uint64_t seed)
{
    if (config.topology == TopologyKind::layered) {
        return build_layered(config.layers, method, range, seed, config.lif);
    }
    return build_lsm(config.lsm, method, range, seed, seed, config.lif);
}

SimOptions cell_sim_options(const SweepConfig& config, const WeightRange& range, std::uint64_t sim_seed)
{
    SimOptions o;
    o.duration = config.duration;
    o.dt = config.dt;
    o.seed = sim_seed;
    o.plasticity = config.plasticity;
    o.stdp = config.stdp;
    o.stdp.w_ceiling = config.stdp_w_ceiling.value_or(2.0 * range.high);
    return o;
}

CellResult run_cell(const SweepConfig& config, std::size_t method_index, std::size_t range_index,
                    std::size_t seed_index)
{
    const auto& method = config.methods[method_index];
    const auto& range = config.ranges[range_index];
    const auto seed = config.seeds[seed_index];
    const auto name = std::string(method_name(method));
    const std::size_t cell = (method_index * config.ranges.size() + range_index) * config.seeds.size() + seed_index;

    CellResult out;
    try {
        const NetworkTopology base = build_cell_topology(config, method, range, seed);
        for (std::size_t e = 0; e < config.epochs; ++e) {
            const auto es = epoch_seed(seed, e, name, range);
            const auto net = reassign_interlayer_weights(base, method, range, es);
            const auto sim = simulate(net, config.stimulus, cell_sim_options(config, range, es));

            std::vector<SpikeTrain> in, outp;
            for (auto id : net.input_ids) in.push_back(sim.recorded.at(id));
            for (auto id : net.output_ids) outp.push_back(sim.recorded.at(id));
            const auto a = merge_population(in);
            const auto b = merge_population(outp);

            SweepRecord r;
            r.run_id = cell * config.epochs + e;
            r.seed = seed;
            r.method = name;
            r.w_low = range.low;
            r.w_high = range.high;
            r.epoch = e;
            r.vp = victor_purpura(a, b, config.vp_q);
            r.vr = van_rossum(a, b, config.vr_tau);
            out.records.push_back(std::move(r));
        }
    } catch (const std::exception& ex) {
        out.records.clear();
        out.error = ex.what();
    }
    return out;
}

void sort_records(std::vector<SweepRecord>& records)
{
    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.method, a.w_low, a.w_high, a.seed, a.epoch, a.run_id) <
               std::tie(b.method, b.w_low, b.w_high, b.seed, b.epoch, b.run_id);
    });
}

namespace {

SweepOutcome collect(const SweepConfig& config, std::vector<CellResult>& cells)
{
    SweepOutcome out;
    const std::size_t nr = config.ranges.size();
    const std::size_t ns = config.seeds.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.error) {
            const auto mi = c / (nr * ns);
            const auto ri = (c / ns) % nr;
            out.failures.push_back({std::string(method_name(config.methods[mi])), config.ranges[ri],
                                    config.seeds[c % ns], *cell.error});
            continue;
        }
        std::move(cell.records.begin(), cell.records.end(), std::back_inserter(out.records));
    }
    sort_records(out.records);
    return out;
}

} // namespace

SweepOutcome run_sweep_serial(const SweepConfig& config)
{
    config.validate();
    const std::size_t nm = config.methods.size(), nr = config.ranges.size(), ns = config.seeds.size();
    std::vector<CellResult> cells(nm * nr * ns);
    for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = run_cell(config, c / (nr * ns), (c / ns) % nr, c % ns);
    return collect(config, cells);
}

SweepOutcome run_sweep(const SweepConfig& config)
{
    config.validate();
    const std::size_t nm = config.methods.size(), nr = config.ranges.size(), ns = config.seeds.size();
    std::vector<CellResult> cells(nm * nr * ns);
    const int threads = config.threads > 0 ? config.threads : max_threads();
    parallel_for(0, static_cast<std::ptrdiff_t>(cells.size()), threads, [&](std::ptrdiff_t p) {
        const auto c = static_cast<std::size_t>(p);
        cells[c] = run_cell(config, c / (nr * ns), (c / ns) % nr, c % ns);
    });
    return collect(config, cells);
}

Summary summarize(const std::vector<SweepRecord>& records)
{
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    struct Acc {
        std::vector<double> vp, vr;
    };
    std::map<std::pair<std::string, WeightRange>, Acc> groups;
    for (const auto& r : records) {
        auto& g = groups[{r.method, WeightRange{r.w_low, r.w_high}}];
        g.vp.push_back(r.vp);
        g.vr.push_back(r.vr);
    }

    auto stats = [](std::vector<double> v, double& mn, double& mean, double& sd) {
        // Sorted so the result does not depend on record order.
        std::sort(v.begin(), v.end());
        mn = v.front();
        double s = 0.0;
        for (double x : v) s += x;
        mean = s / static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        sd = std::sqrt(ss / static_cast<double>(v.size()));
    };

    Summary out;
    for (auto& [key, acc] : groups) {
        SummaryCell c;
        c.method = key.first;
        c.range = key.second;
        c.count = acc.vp.size();
        stats(acc.vp, c.vp_min, c.vp_mean, c.vp_std);
        stats(acc.vr, c.vr_min, c.vr_mean, c.vr_std);
        out.cells.push_back(std::move(c));
    }
    // Cells are ordered by (method, range), so strict '<' keeps the lower range on ties.
    for (std::size_t i = 0; i < out.cells.size();) {
        MethodBest b{out.cells[i].method, out.cells[i].range, out.cells[i].range};
        double best_vp = out.cells[i].vp_min, best_vr = out.cells[i].vr_min;
        std::size_t j = i + 1;
        for (; j < out.cells.size() && out.cells[j].method == b.method; ++j) {
            if (out.cells[j].vp_min < best_vp) { best_vp = out.cells[j].vp_min; b.vp_best = out.cells[j].range; }
            if (out.cells[j].vr_min < best_vr) { best_vr = out.cells[j].vr_min; b.vr_best = out.cells[j].range; }
        }
        out.best.push_back(std::move(b));
        i = j;
    }
    return out;
}

} // namespace spikesweep
