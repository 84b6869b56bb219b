#include "spikesweep/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "spikesweep/config.hpp"
#include "spikesweep/metrics.hpp"
#include "spikesweep/report.hpp"
#include "spikesweep/simulator.hpp"

namespace spikesweep {

namespace {

namespace fs = std::filesystem;

SweepConfig load_config(const std::string& path)
{
    if (path.empty()) return SweepConfig{};
    const auto text = read_text_file(path);
    try {
        return parse_config(text);
    } catch (const ConfigError& e) {
        throw ConfigError(e.kind, e.line, e.column, path + ": " + std::string(e.what()));
    }
}

void ensure_dir(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

std::string join_path(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

int cmd_sweep(const std::string& config_path, const std::string& out_dir, int threads, std::ostream& out,
              std::ostream& err)
{
    auto cfg = load_config(config_path);
    if (threads > 0) cfg.threads = threads;
    ensure_dir(out_dir);
    const auto outcome = run_sweep(cfg);
    for (const auto& f : outcome.failures) {
        err << "cell failed: method=" << f.method << " range=" << format_g6(f.range.low) << ":"
            << format_g6(f.range.high) << " seed=" << f.seed << ": " << f.message << "\n";
    }
    if (!outcome.failures.empty()) {
        std::string rep = "method,w_low,w_high,seed,message\n";
        for (const auto& f : outcome.failures) {
            rep += f.method + "," + format_g6(f.range.low) + "," + format_g6(f.range.high) + "," +
                   std::to_string(f.seed) + ",\"" + f.message + "\"\n";
        }
        write_text_file(join_path(out_dir, "failures.csv"), rep);
    }
    if (outcome.records.empty()) {
        err << "sweep produced no records\n";
        return exit_runtime;
    }
    write_csv(outcome.records, join_path(out_dir, "records.csv"));
    write_summary_csv(summarize(outcome.records), join_path(out_dir, "summary.csv"));
    emit_plot(outcome.records, PlotMetric::vp, join_path(out_dir, "vp.svg"));
    emit_plot(outcome.records, PlotMetric::vr, join_path(out_dir, "vr.svg"));
    out << outcome.records.size() << " records written to " << out_dir << "\n";
    return exit_ok;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, std::uint64_t epoch,
                 std::ostream& out)
{
    const auto cfg = load_config(config_path);
    cfg.validate();
    ensure_dir(out_dir);
    const auto& method = cfg.methods.front();
    const auto& range = cfg.ranges.front();
    const auto seed = cfg.seeds.front();
    const auto es = epoch_seed(seed, epoch, method_name(method), range);
    const auto net = reassign_interlayer_weights(build_cell_topology(cfg, method, range, seed), method, range, es);
    const auto sim = simulate(net, cfg.stimulus, cell_sim_options(cfg, range, es));
    write_text_file(join_path(out_dir, "topology.csv"), format_topology_csv(net));
    for (const auto& [id, train] : sim.recorded) {
        write_spike_train(train, join_path(out_dir, "neuron_" + std::to_string(id) + ".txt"));
        out << "neuron " << id << ": " << train.size() << " spikes\n";
    }
    return exit_ok;
}

int cmd_metric(const std::string& which, const std::string& a_path, const std::string& b_path,
               std::optional<double> q, std::optional<double> tau, std::ostream& out, std::ostream& err)
{
    const auto a = read_spike_train(a_path);
    const auto b = read_spike_train(b_path);
    if (a.t_start() != b.t_start() || a.t_stop() != b.t_stop()) {
        err << "warning: spike trains have different observation windows\n";
    }
    const double d = which == "vp" ? victor_purpura(a, b, q.value_or(1.0)) : van_rossum(a, b, tau.value_or(10.0));
    out << format_g6(d) << "\n";
    return exit_ok;
}

int cmd_graph(const std::string& which, std::size_t n, std::size_t m, std::optional<double> p,
              std::uint64_t seed, double low, double high, double keep, const std::string& out_dir,
              std::ostream& out)
{
    WeightRange range{low, high};
    range.validate();
    const Graph g = which == "ba" ? barabasi_albert(n, m, seed)
                                  : erdos_renyi(n, p.value_or(matched_er_probability(n, m)), seed);
    ensure_dir(out_dir);
    write_text_file(join_path(out_dir, "edges.txt"), format_edge_list(g));
    std::string csv = "node,degree,weight,kept\n";
    for (const auto& row : degree_weight_table(g, range, keep)) {
        csv += std::to_string(row.node) + "," + std::to_string(row.degree) + "," + format_g6(row.weight) + "," +
               (row.kept ? "1" : "0") + "\n";
    }
    write_text_file(join_path(out_dir, "degrees.csv"), csv);
    out << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spiking network weight-range sweeps and spike-train metrics", "spikesweep"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int threads = 0;
    bool print_defaults = false;
    auto* sweep = app.add_subcommand("sweep", "Run a weight-range sweep and write CSV/SVG results");
    sweep->add_option("--config", config_path, "Config file (defaults when omitted)");
    auto* sweep_out = sweep->add_option("--out", out_dir, "Output directory");
    sweep->add_option("--threads", threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    sweep->add_flag("--print-defaults", print_defaults, "Print the built-in configuration and exit");

    std::string sim_config, sim_out;
    std::uint64_t sim_epoch = 0;
    auto* simc = app.add_subcommand("simulate", "Run one simulation and dump recorded spike trains");
    simc->add_option("--config", sim_config, "Config file")->required();
    simc->add_option("--out", sim_out, "Output directory")->required();
    simc->add_option("--epoch", sim_epoch, "Epoch index used to derive the weights");

    std::string metric_kind, a_path, b_path;
    std::optional<double> q, tau;
    auto* metric = app.add_subcommand("metric", "Distance between two spike-train files");
    metric->add_option("kind", metric_kind, "vp or vr")->required()->check(CLI::IsMember({"vp", "vr"}));
    metric->add_option("--a", a_path, "First spike train")->required();
    metric->add_option("--b", b_path, "Second spike train")->required();
    metric->add_option("--q", q, "Victor-Purpura shift cost per ms (default 1)");
    metric->add_option("--tau", tau, "van Rossum kernel time constant in ms (default 10)");

    std::string graph_kind, graph_out;
    std::size_t nodes = 100, edges_per_node = 2;
    std::optional<double> prob;
    std::uint64_t graph_seed = 0;
    double low = 1.0, high = 10.0, keep = default_keep_fraction;
    auto* graph = app.add_subcommand("graph", "Generate a random graph and its degree/weight table");
    graph->add_option("kind", graph_kind, "ba or er")->required()->check(CLI::IsMember({"ba", "er"}));
    graph->add_option("--nodes", nodes, "Node count");
    graph->add_option("--m", edges_per_node, "BA edges per new node (also sets the matched ER p)");
    graph->add_option("--p", prob, "ER edge probability");
    graph->add_option("--seed", graph_seed, "RNG seed");
    graph->add_option("--low", low, "Weight range low");
    graph->add_option("--high", high, "Weight range high");
    graph->add_option("--keep", keep, "Fraction of highest-degree nodes kept");
    graph->add_option("--out", graph_out, "Output directory")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (*sweep) {
            if (print_defaults) {
                out << serialize_config(SweepConfig{});
                return exit_ok;
            }
            if (sweep_out->count() == 0) throw CLI::RequiredError("--out");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sweep) return cmd_sweep(config_path, out_dir, threads, out, err);
        if (*simc) return cmd_simulate(sim_config, sim_out, sim_epoch, out);
        if (*metric) return cmd_metric(metric_kind, a_path, b_path, q, tau, out, err);
        if (*graph) return cmd_graph(graph_kind, nodes, edges_per_node, prob, graph_seed, low, high, keep, graph_out, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const SpikeTrainFormatError& e) {
        err << "spike train error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_usage;
}

} // namespace spikesweep
