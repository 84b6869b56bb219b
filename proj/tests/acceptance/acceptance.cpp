// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spikesweep/config.hpp"
#include "spikesweep/experiment.hpp"
#include "spikesweep/graph.hpp"
#include "spikesweep/lif.hpp"
#include "spikesweep/metrics.hpp"
#include "spikesweep/report.hpp"
#include "spikesweep/stdp.hpp"
#include "spikesweep/weight_init.hpp"

using namespace spikesweep;
namespace fs = std::filesystem;

namespace {

// Tolerances and budgets.
constexpr double vr_rel_tol = 1e-4;
constexpr double lif_abs_tol_mv = 0.05;
constexpr double stdp_rel_tol = 1e-9;
constexpr double er_mean_tol = 6.3;
constexpr double knee_seed_fraction = 0.9;

constexpr double budget_c1_s = 10, budget_c2_s = 30, budget_c3_s = 1, budget_c4_s = 5;
constexpr double budget_c6_s = 120, budget_c7_s = 600, budget_c8_s = 300, budget_c9_s = 900;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::uint64_t> seed_range(std::uint64_t n)
{
    std::vector<std::uint64_t> s(n);
    for (std::uint64_t i = 0; i < n; ++i) s[i] = i;
    return s;
}

// Sweeps used by criteria 6-9, kept so criterion 10 can rerun them.
struct NamedSweep {
    std::string name;
    SweepConfig config;
    std::string records_csv;
};
std::vector<NamedSweep> sweeps;

fs::path out_root() { return fs::current_path() / "acceptance_out"; }

std::vector<SweepRecord> run_and_store(const std::string& name, const SweepConfig& config)
{
    const auto outcome = run_sweep(config);
    if (!outcome.failures.empty()) {
        throw std::runtime_error(name + ": " + std::to_string(outcome.failures.size()) + " cells failed: " +
                                 outcome.failures.front().message);
    }
    const auto dir = out_root() / "run1" / name;
    fs::create_directories(dir);
    write_csv(outcome.records, (dir / "records.csv").string());
    sweeps.push_back({name, config, read_text_file((dir / "records.csv").string())});
    return outcome.records;
}

// Argmin range of the chosen metric for one seed, by per-range minimum,
// ties to the lower range.
WeightRange seed_argmin(const std::vector<SweepRecord>& records, std::uint64_t seed, const std::string& method,
                        bool use_vr)
{
    std::vector<SweepRecord> subset;
    for (const auto& r : records)
        if (r.seed == seed && r.method == method) subset.push_back(r);
    const auto s = summarize(subset);
    return use_vr ? s.best.front().vr_best : s.best.front().vp_best;
}

std::string range_str(const WeightRange& r) { return format_g6(r.low) + ":" + format_g6(r.high); }

// ---------------------------------------------------------------------------

Outcome c1_vp_oracle()
{
    const auto t0 = Clock::now();
    std::vector<std::vector<double>> trains;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<double> t;
        for (int k = 0; k < 6; ++k)
            if (mask & (1 << k)) t.push_back(k);
        if (t.size() <= 4) trains.push_back(t);
    }
    std::size_t pairs = 0, mismatches = 0;
    for (double q : {0.0, 0.5, 1.0, 10.0}) {
        for (const auto& a : trains) {
            for (const auto& b : trains) {
                ++pairs;
                if (victor_purpura(a, b, q) != oracle::victor_purpura_enumerate(a, b, q)) ++mismatches;
            }
        }
    }
    const double secs = seconds_since(t0);
    return {mismatches == 0 && secs < budget_c1_s,
            fmt("%zu trains, %zu pairs x q, %zu mismatches, %.2fs (budget %.0fs)", trains.size(), pairs, mismatches,
                secs, budget_c1_s)};
}

Outcome c2_vr_oracle()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> count(0, 20);
    std::uniform_real_distribution<double> time(0.0, 200.0);
    const double taus[] = {1.0, 10.0, 50.0};
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        auto draw = [&] {
            std::vector<double> t(static_cast<std::size_t>(count(rng)));
            for (auto& x : t) x = time(rng);
            std::sort(t.begin(), t.end());
            return t;
        };
        const auto a = draw();
        const auto b = draw();
        const double tau = taus[trial % 3];
        const double ref = oracle::van_rossum_quadrature(a, b, tau, 0.01, 10.0);
        const double got = van_rossum(a, b, tau);
        const double err = ref == 0.0 ? std::abs(got) : std::abs(got - ref) / ref;
        worst = std::max(worst, err);
    }
    const double secs = seconds_since(t0);
    return {worst <= vr_rel_tol && secs < budget_c2_s,
            fmt("200 pairs, worst relative error %.3g (tol %.0e), %.2fs", worst, vr_rel_tol, secs)};
}

Outcome c3_lif()
{
    const auto t0 = Clock::now();
    LifParams p;
    LifParams sub = p;
    sub.u_th = std::numeric_limits<double>::infinity();
    const double dt = 0.1;
    const double current = 250.0;
    NeuronState s = NeuronState::at_rest(sub);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        s = lif_step(s, sub, current, 0.0, dt, k * dt).state;
        worst = std::max(worst, std::abs(s.u - oracle::lif_analytic(p.u_rest, p.u_rest, p.tau_m, p.c_m, current,
                                                                      (k + 1) * dt)));
    }

    const double supra = 500.0;
    const double u_inf = p.u_rest + supra * p.tau_m / p.c_m;
    const double t_star = p.tau_m * std::log((u_inf - p.u_rest) / (u_inf - p.u_th));
    s = NeuronState::at_rest(p);
    double first = -1.0;
    for (int k = 0; k < 10000 && first < 0.0; ++k) {
        const auto r = lif_step(s, p, supra, 0.0, dt, k * dt);
        s = r.state;
        if (r.spiked) first = (k + 1) * dt;
    }
    const double secs = seconds_since(t0);
    const bool ok = worst < lif_abs_tol_mv && std::abs(first - t_star) <= dt && secs < budget_c3_s;
    return {ok, fmt("max sub-threshold error %.4f mV (tol %.2f); first spike %.2f ms vs t* %.4f ms", worst,
                    lif_abs_tol_mv, first, t_star)};
}

Outcome c4_stdp()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> count(0, 25);
    std::uniform_int_distribution<int> slot(0, 1000);
    std::uniform_real_distribution<double> amp(0.01, 1.0);
    std::uniform_real_distribution<double> tau(1.0, 50.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        StdpParams p;
        p.a_plus = amp(rng);
        p.a_minus = amp(rng);
        p.tau_plus = tau(rng);
        p.tau_minus = tau(rng);
        p.w_floor = -std::numeric_limits<double>::infinity();
        auto draw = [&] {
            std::vector<double> t;
            for (int i = 0, n = count(rng); i < n; ++i) t.push_back(slot(rng) * 0.1);
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            return t;
        };
        const auto pre = draw();
        const auto post = draw();
        // Double sum written out here; relative error is taken against the
        // sum of term magnitudes since the signed sum may cancel.
        double sum = 0.0, mag = 0.0;
        for (double tp : post) {
            for (double tf : pre) {
                const double x = tp - tf;
                const double w = x > 0 ? p.a_plus * std::exp(-x / p.tau_plus)
                                 : x < 0 ? -p.a_minus * std::exp(x / p.tau_minus) : 0.0;
                sum += w;
                mag += std::abs(w);
            }
        }
        const double got = online_delta(pre, post, p);
        const double err = mag == 0.0 ? std::abs(got) : std::abs(got - sum) / mag;
        worst = std::max(worst, err);
    }
    const double secs = seconds_since(t0);
    return {worst <= stdp_rel_tol && secs < budget_c4_s,
            fmt("1000 event sets, worst relative error %.3g (tol %.0e), %.2fs", worst, stdp_rel_tol, secs)};
}

Outcome c5_graphs()
{
    bool ba_ok = true;
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{10, 2}, {100, 2}, {50, 5}}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            if (barabasi_albert(n, m, seed).edge_count() != (n - m) * m) ba_ok = false;
        }
    }
    double er_total = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) er_total += static_cast<double>(erdos_renyi(100, 0.1, seed).edge_count());
    const double er_mean = er_total / 100.0;
    const bool er_ok = std::abs(er_mean - 495.0) <= er_mean_tol;

    const double p = matched_er_probability(100, 2);
    double ba_max = 0.0, er_max = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto bd = barabasi_albert(100, 2, seed).degrees();
        const auto ed = erdos_renyi(100, p, seed).degrees();
        ba_max += static_cast<double>(*std::max_element(bd.begin(), bd.end()));
        er_max += static_cast<double>(*std::max_element(ed.begin(), ed.end()));
    }
    ba_max /= 200.0;
    er_max /= 200.0;
    const bool tail_ok = ba_max > er_max;
    return {ba_ok && er_ok && tail_ok,
            fmt("BA counts %s; ER mean edges %.2f over seeds 0..99 (495 +/- %.1f) %s; mean max degree BA %.2f vs ER %.2f",
                ba_ok ? "exact" : "WRONG", er_mean, er_mean_tol, er_ok ? "ok" : "OUT", ba_max, er_max)};
}

Outcome c6_knee()
{
    const auto t0 = Clock::now();
    SweepConfig c;
    c.topology = TopologyKind::layered;
    c.layers = {2, 2};
    c.methods = {UniformRandom{}};
    c.ranges.clear();
    for (int w = 50; w <= 600; w += 50) c.ranges.push_back({w - 0.5, w + 0.5});
    c.seeds = seed_range(20);
    const auto records = run_and_store("c6_two_layer_knee", c);

    // Per seed and overall: mean over w <= 300 vs mean over w >= 450.
    struct Acc {
        double lo_vp = 0, lo_vr = 0, hi_vp = 0, hi_vr = 0;
        int lo_n = 0, hi_n = 0;
    };
    std::map<std::uint64_t, Acc> per_seed;
    Acc all;
    for (const auto& r : records) {
        const double w = 0.5 * (r.w_low + r.w_high);
        for (Acc* a : {&per_seed[r.seed], &all}) {
            if (w <= 300) {
                a->lo_vp += r.vp;
                a->lo_vr += r.vr;
                ++a->lo_n;
            } else if (w >= 450) {
                a->hi_vp += r.vp;
                a->hi_vr += r.vr;
                ++a->hi_n;
            }
        }
    }
    auto holds = [](const Acc& a) {
        return a.hi_vp / a.hi_n > a.lo_vp / a.lo_n && a.hi_vr / a.hi_n > a.lo_vr / a.lo_n;
    };
    int seeds_ok = 0;
    for (const auto& [seed, a] : per_seed) seeds_ok += holds(a) ? 1 : 0;
    const double frac = static_cast<double>(seeds_ok) / static_cast<double>(per_seed.size());
    const double secs = seconds_since(t0);
    return {holds(all) && frac >= knee_seed_fraction && secs < budget_c6_s,
            fmt("VP %.2f (w<=300) -> %.2f (w>=450); VR %.3f -> %.3f; per-seed ordering %d/%zu; %.1fs",
                all.lo_vp / all.lo_n, all.hi_vp / all.hi_n, all.lo_vr / all.lo_n, all.hi_vr / all.hi_n, seeds_ok,
                per_seed.size(), secs)};
}

Outcome c7_three_layer()
{
    const auto t0 = Clock::now();
    SweepConfig c;
    c.topology = TopologyKind::layered;
    c.layers = {100, 100, 100};
    c.methods = {UniformRandom{}};
    c.ranges = {{1, 3}, {3, 6}, {6, 12}, {12, 20}};
    c.seeds = seed_range(10);
    c.epochs = 10;
    const auto records = run_and_store("c7_three_layer", c);
    std::map<std::string, int> tally;
    int low = 0;
    for (auto seed : c.seeds) {
        const auto best = seed_argmin(records, seed, "uniform", true);
        ++tally[range_str(best)];
        if (best.high <= 6) ++low;
    }
    const auto s = summarize(records);
    std::string cells;
    for (const auto& cell : s.cells) cells += " " + range_str(cell.range) + "=" + format_g6(cell.vr_min);
    std::string counts;
    for (const auto& [r, n] : tally) counts += " " + r + "x" + std::to_string(n);
    const double secs = seconds_since(t0);
    return {2 * low > static_cast<int>(c.seeds.size()) && secs < budget_c7_s,
            fmt("argmin VR <= 6 in %d/%zu seeds (%s); VR min per range:%s; %zu epochs; %.1fs", low, c.seeds.size(),
                counts.c_str() + 1, cells.c_str(), c.epochs, secs)};
}

Outcome c8_lsm()
{
    const auto t0 = Clock::now();
    SweepConfig c;
    c.topology = TopologyKind::lsm;
    c.methods = {BarabasiAlbert{}};
    c.ranges = {{1, 10}, {10, 20}, {20, 35}, {35, 50}};
    c.seeds = seed_range(20);
    c.epochs = 30;
    const auto records = run_and_store("c8_lsm_band", c);
    std::map<std::string, int> tally;
    int hits = 0;
    for (auto seed : c.seeds) {
        const auto best = seed_argmin(records, seed, "barabasi_albert", true);
        ++tally[range_str(best)];
        if (best == WeightRange{10, 20}) ++hits;
    }
    const auto s = summarize(records);
    std::string cells;
    for (const auto& cell : s.cells)
        cells += " " + range_str(cell.range) + "=" + format_g6(cell.vr_min) + "/" + format_g6(cell.vr_mean);
    std::string counts;
    for (const auto& [r, n] : tally) counts += " " + r + "x" + std::to_string(n);
    const double secs = seconds_since(t0);
    return {2 * hits > static_cast<int>(c.seeds.size()) && secs < budget_c8_s,
            fmt("argmin VR = 10:20 in %d/%zu seeds (%s); VR min/mean per range:%s; %.1fs", hits, c.seeds.size(),
                counts.c_str() + 1, cells.c_str(), secs)};
}

Outcome c9_table()
{
    const auto t0 = Clock::now();
    SweepConfig c;  // defaults: LSM, three methods, ranges 1:10..1:100, 20 seeds, 30 epochs
    const auto records = run_and_store("c9_three_methods", c);
    const auto s = summarize(records);

    std::map<WeightRange, std::map<std::string, double>> by_range;
    for (const auto& cell : s.cells) by_range[cell.range][cell.method] = cell.vr_min;
    int ba_wins = 0;
    std::string detail;
    for (const auto& [range, per_method] : by_range) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [m, v] : per_method) best = std::min(best, v);
        const bool ba = per_method.count("barabasi_albert") && per_method.at("barabasi_albert") <= best;
        ba_wins += ba ? 1 : 0;
        std::string ties;
        for (const auto& [m, v] : per_method)
            if (v <= best) ties += (ties.empty() ? "" : "+") + m;
        detail += " " + range_str(range) + ":" + ties;
    }
    bool best_low = true;
    std::string bests;
    for (const auto& b : s.best) {
        best_low = best_low && b.vr_best.high <= 20;
        bests += " " + b.method + "=" + range_str(b.vr_best);
    }
    const double secs = seconds_since(t0);
    return {2 * ba_wins >= static_cast<int>(by_range.size()) && best_low && secs < budget_c9_s,
            fmt("BA attains min VR in %d/%zu ranges (winners:%s); best ranges:%s; %.1fs", ba_wins, by_range.size(),
                detail.c_str(), bests.c_str(), secs)};
}

Outcome c10_reproducible()
{
    if (sweeps.empty()) return {false, "no sweeps ran"};
    std::string detail;
    bool ok = true;
    for (const auto& s : sweeps) {
        auto config = s.config;
        config.threads = 2;  // different worker count on the rerun
        const auto outcome = run_sweep(config);
        const auto dir = out_root() / "run2" / s.name;
        fs::create_directories(dir);
        write_csv(outcome.records, (dir / "records.csv").string());
        const bool same = read_text_file((dir / "records.csv").string()) == s.records_csv;
        ok = ok && same;
        detail += " " + s.name + (same ? "=identical" : "=DIFFERENT");
    }
    return {ok, "records.csv byte comparison:" + detail};
}

Outcome c11_contracts()
{
    const std::string data = SPIKESWEEP_TEST_DATA;
    const std::vector<SweepRecord> fixture{
        {5, 1, "uniform", 1, 10, 2, 3.5, 0.123456789},
        {1, 0, "barabasi_albert", 1, 20, 1, 1e-7, 123456789.0},
        {0, 0, "barabasi_albert", 1, 20, 0, 12, 1.0 / 3.0},
    };
    const bool golden = format_records_csv(fixture) == read_text_file(data + "/records_golden.csv");

    std::mt19937_64 rng(4242);
    int round_trips = 0;
    for (int i = 0; i < 500; ++i) {
        auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
        auto n = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
        SweepConfig c;
        c.dt = u(0.01, 1.0);
        c.duration = u(1.0, 1e4);
        c.plasticity = n(0, 1) == 1;
        c.stimulus.rate = u(0.5, 100.0);
        c.stimulus.amplitude = u(0.0, 1e5);
        c.lif.u_rest = u(-90.0, -50.0);
        c.lif.u_reset = c.lif.u_rest - u(0.0, 5.0);
        c.lif.u_th = c.lif.u_rest + u(0.5, 40.0);
        c.lif.kappa = u(1e-3, 2.0);
        c.topology = n(0, 1) ? TopologyKind::layered : TopologyKind::lsm;
        c.layers.assign(n(2, 4), n(1, 500));
        c.lsm.n_liquid = n(2, 40);
        c.lsm.k_rec = n(1, c.lsm.n_liquid - 1);
        const std::size_t ba_n = n(2, 500);
        c.methods = {BarabasiAlbert{ba_n, n(1, ba_n - 1)}, ErdosRenyi{n(2, 500), u(0.0, 1.0)}};
        if (n(0, 1)) c.methods.insert(c.methods.begin(), UniformRandom{});
        c.ranges.clear();
        for (std::size_t k = 0, m = n(1, 5); k < m; ++k) {
            const double lo = u(0.0, 50.0);
            c.ranges.push_back({lo, lo + u(1e-3, 500.0)});
        }
        c.epochs = n(1, 1000);
        c.seeds.assign(n(1, 30), 0);
        for (auto& s : c.seeds) s = rng();
        c.vp_q = u(0.0, 5.0);
        c.vr_tau = u(0.1, 100.0);
        c.stdp.a_plus = u(0.0, 1.0);
        c.stdp.tau_minus = u(0.1, 100.0);
        if (n(0, 1)) c.stdp_w_ceiling = c.stdp.w_floor + u(1e-3, 1e3);
        if (parse_config(serialize_config(c)) == c) ++round_trips;
    }

    int rejected = 0, total = 0;
    std::string misses;
    for (const auto& entry : fs::directory_iterator(data + "/bad_configs")) {
        ++total;
        const auto text = read_text_file(entry.path().string());
        std::istringstream head(text.substr(0, text.find('\n')));
        std::string hash, word, kind;
        int line = 0;
        head >> hash >> word >> kind >> line;
        try {
            parse_config(text);
            misses += " " + entry.path().filename().string() + "(accepted)";
        } catch (const ConfigError& e) {
            std::string got;
            for (auto k : {ConfigErrorKind::syntax, ConfigErrorKind::unknown_section, ConfigErrorKind::unknown_key,
                           ConfigErrorKind::bad_value, ConfigErrorKind::invariant}) {
                if (k == e.kind) {
                    got = k == ConfigErrorKind::syntax            ? "syntax"
                          : k == ConfigErrorKind::unknown_section ? "unknown_section"
                          : k == ConfigErrorKind::unknown_key     ? "unknown_key"
                          : k == ConfigErrorKind::bad_value       ? "bad_value"
                                                                  : "invariant";
                }
            }
            if (got == kind && e.line == line) {
                ++rejected;
            } else {
                misses += " " + entry.path().filename().string() + "(" + got + "@" + std::to_string(e.line) + ")";
            }
        }
    }
    const bool ok = golden && round_trips == 500 && total > 0 && rejected == total;
    return {ok, fmt("golden %s; config round trips %d/500; malformed fixtures located %d/%d%s",
                    golden ? "equal" : "DIFFERENT", round_trips, rejected, total, misses.c_str())};
}

} // namespace

int main()
{
    const auto t0 = Clock::now();
    report(1, "VP oracle equivalence", c1_vp_oracle);
    report(2, "VR oracle equivalence", c2_vr_oracle);
    report(3, "LIF analytic checks", c3_lif);
    report(4, "STDP online/offline equivalence", c4_stdp);
    report(5, "graph generators", c5_graphs);
    report(6, "two-layer knee", c6_knee);
    report(7, "three-layer low-weight optimum", c7_three_layer);
    report(8, "LSM optimum band 10:20", c8_lsm);
    report(9, "three-method table conclusion", c9_table);
    report(10, "reproducibility", c10_reproducible);
    report(11, "CSV/plot/config contracts", c11_contracts);
    std::printf("%d criteria failed, total %.1fs\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
