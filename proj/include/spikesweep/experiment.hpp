#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spikesweep/lif.hpp"
#include "spikesweep/simulator.hpp"
#include "spikesweep/stdp.hpp"
#include "spikesweep/stimulus.hpp"
#include "spikesweep/topology.hpp"
#include "spikesweep/weight_init.hpp"

namespace spikesweep {

enum class TopologyKind { layered, lsm };

struct SweepConfig {
    // [simulation]
    double dt = 0.1;
    double duration = 1000.0;
    bool plasticity = true;
    StimulusSpec stimulus{};
    LifParams lif{};
    // [topology]
    TopologyKind topology = TopologyKind::lsm;
    std::vector<std::size_t> layers{2, 2};
    LsmOptions lsm{};
    // [init]
    std::vector<InitMethod> methods{UniformRandom{}, BarabasiAlbert{}, ErdosRenyi{}};
    // [sweep]
    std::vector<WeightRange> ranges{{1, 10}, {1, 20}, {1, 50}, {1, 100}};
    std::size_t epochs = 30;
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9,
                                     10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
    // 0 = OpenMP default.
    int threads = 0;
    // [metrics]
    double vp_q = 1.0;
    double vr_tau = 10.0;
    // [stdp]; w_ceiling unset means twice the upper bound of each cell's range.
    StdpParams stdp{};
    std::optional<double> stdp_w_ceiling;

    void validate() const;
    bool operator==(const SweepConfig&) const = default;
};

struct SweepRecord {
    std::uint64_t run_id = 0;
    std::uint64_t seed = 0;
    std::string method;
    double w_low = 0.0;
    double w_high = 0.0;
    std::uint64_t epoch = 0;
    double vp = 0.0;
    double vr = 0.0;

    bool operator==(const SweepRecord&) const = default;
};

struct CellFailure {
    std::string method;
    WeightRange range;
    std::uint64_t seed = 0;
    std::string message;
};

struct SweepOutcome {
    std::vector<SweepRecord> records;
    std::vector<CellFailure> failures;
};

/// Seed for one epoch of one grid cell; cells are reproducible in isolation.
std::uint64_t epoch_seed(std::uint64_t seed, std::uint64_t epoch, std::string_view method,
                         const WeightRange& range);

/// Everything one (method, range, seed) cell needs, resolved from the config.
struct CellResult {
    std::vector<SweepRecord> records;
    std::optional<std::string> error;
};
CellResult run_cell(const SweepConfig& config, std::size_t method_index, std::size_t range_index,
                    std::size_t seed_index);

/// The topology a cell starts from (liquid seeded by `seed`).
NetworkTopology build_cell_topology(const SweepConfig& config, const InitMethod& method,
                                    const WeightRange& range, std::uint64_t seed);
SimOptions cell_sim_options(const SweepConfig& config, const WeightRange& range,
                            std::uint64_t sim_seed);

/// Grid run. Records come back sorted by (method, w_low, w_high, seed, epoch).
SweepOutcome run_sweep_serial(const SweepConfig& config);
SweepOutcome run_sweep(const SweepConfig& config);

void sort_records(std::vector<SweepRecord>& records);

struct SummaryCell {
    std::string method;
    WeightRange range;
    std::size_t count = 0;
    double vp_min = 0, vp_mean = 0, vp_std = 0;
    double vr_min = 0, vr_mean = 0, vr_std = 0;
};

struct MethodBest {
    std::string method;
    // Range with the smallest per-cell minimum; ties go to the lower range.
    WeightRange vp_best;
    WeightRange vr_best;
};

struct Summary {
    std::vector<SummaryCell> cells;  // sorted by (method, range)
    std::vector<MethodBest> best;    // sorted by method
};

/// Population standard deviation. Throws on empty input.
Summary summarize(const std::vector<SweepRecord>& records);

} // namespace spikesweep
