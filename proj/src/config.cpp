#include "spikesweep/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

namespace spikesweep {

std::string_view to_string(ConfigErrorKind k)
{
    switch (k) {
    case ConfigErrorKind::syntax: return "syntax error";
    case ConfigErrorKind::unknown_section: return "unknown section";
    case ConfigErrorKind::unknown_key: return "unknown key";
    case ConfigErrorKind::bad_value: return "bad value";
    case ConfigErrorKind::invariant: return "invalid setting";
    }
    return "error";
}

ConfigError::ConfigError(ConfigErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind(kind), line(line), column(column)
{
}

namespace {

struct Value {
    std::string_view text;
    int line;
    int column;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ConfigError(ConfigErrorKind::bad_value, line, column, msg);
    }
    [[noreturn]] void violate(const std::string& msg) const
    {
        throw ConfigError(ConfigErrorKind::invariant, line, column, msg);
    }
};

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Value> split_list(const Value& v)
{
    std::vector<Value> items;
    std::size_t pos = 0;
    for (;;) {
        auto comma = v.text.find(',', pos);
        const auto end = comma == std::string_view::npos ? v.text.size() : comma;
        const auto raw = v.text.substr(pos, end - pos);
        const auto lead = raw.find_first_not_of(" \t");
        const int col = v.column + static_cast<int>(pos + (lead == std::string_view::npos ? 0 : lead));
        const auto item = trim(raw);
        if (item.empty()) throw ConfigError(ConfigErrorKind::bad_value, v.line, col, "empty list element");
        items.push_back({item, v.line, col});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return items;
}

double as_double(const Value& v)
{
    double d = 0.0;
    const auto res = std::from_chars(v.text.data(), v.text.data() + v.text.size(), d);
    if (res.ec != std::errc{} || res.ptr != v.text.data() + v.text.size() || !std::isfinite(d)) {
        v.fail("expected a decimal number, got '" + std::string(v.text) + "'");
    }
    return d;
}

double as_positive(const Value& v)
{
    const double d = as_double(v);
    if (!(d > 0.0)) v.violate("value must be > 0");
    return d;
}

double as_nonnegative(const Value& v)
{
    const double d = as_double(v);
    if (!(d >= 0.0)) v.violate("value must be >= 0");
    return d;
}

std::uint64_t as_uint(const Value& v)
{
    std::uint64_t x = 0;
    const auto res = std::from_chars(v.text.data(), v.text.data() + v.text.size(), x);
    if (res.ec != std::errc{} || res.ptr != v.text.data() + v.text.size()) {
        v.fail("expected a non-negative integer, got '" + std::string(v.text) + "'");
    }
    return x;
}

std::size_t as_count(const Value& v)
{
    const auto x = as_uint(v);
    if (x == 0) v.violate("value must be >= 1");
    return static_cast<std::size_t>(x);
}

bool as_bool(const Value& v)
{
    if (v.text == "true") return true;
    if (v.text == "false") return false;
    v.fail("expected true or false, got '" + std::string(v.text) + "'");
}

WeightRange as_range(const Value& v)
{
    const auto colon = v.text.find(':');
    if (colon == std::string_view::npos) v.fail("expected lo:hi, got '" + std::string(v.text) + "'");
    const Value lo{trim(v.text.substr(0, colon)), v.line, v.column};
    const Value hi{trim(v.text.substr(colon + 1)), v.line, v.column + static_cast<int>(colon) + 1};
    WeightRange r{as_double(lo), as_double(hi)};
    if (r.low < 0.0) lo.violate("range low must be >= 0");
    if (!(r.low < r.high)) v.violate("range requires lo < hi, got '" + std::string(v.text) + "'");
    return r;
}

struct Parsed {
    SweepConfig cfg;
    std::vector<std::pair<std::string, Value>> method_names;
    BarabasiAlbert ba{};
    ErdosRenyi er{};
    std::optional<double> er_p;
    std::map<std::string, int> section_line;  // last line touched per section
};

using Setter = std::function<void(Parsed&, const Value&)>;

const std::map<std::string, std::map<std::string, Setter>>& grammar()
{
    static const std::map<std::string, std::map<std::string, Setter>> g = {
        {"simulation",
         {
             {"dt_ms", [](Parsed& p, const Value& v) { p.cfg.dt = as_positive(v); }},
             {"duration_ms", [](Parsed& p, const Value& v) { p.cfg.duration = as_positive(v); }},
             {"plasticity", [](Parsed& p, const Value& v) { p.cfg.plasticity = as_bool(v); }},
             {"stim_kind",
              [](Parsed& p, const Value& v) {
                  if (v.text == "regular") p.cfg.stimulus.kind = StimulusKind::regular;
                  else if (v.text == "poisson") p.cfg.stimulus.kind = StimulusKind::poisson;
                  else v.fail("expected regular or poisson");
              }},
             {"stim_rate_hz", [](Parsed& p, const Value& v) { p.cfg.stimulus.rate = as_positive(v); }},
             {"stim_seed", [](Parsed& p, const Value& v) { p.cfg.stimulus.seed = as_uint(v); }},
             {"stim_amplitude_pa", [](Parsed& p, const Value& v) { p.cfg.stimulus.amplitude = as_nonnegative(v); }},
             {"stim_stagger", [](Parsed& p, const Value& v) { p.cfg.stimulus.stagger = as_bool(v); }},
             {"kappa_mv", [](Parsed& p, const Value& v) { p.cfg.lif.kappa = as_positive(v); }},
             {"u_rest_mv", [](Parsed& p, const Value& v) { p.cfg.lif.u_rest = as_double(v); }},
             {"u_th_mv", [](Parsed& p, const Value& v) { p.cfg.lif.u_th = as_double(v); }},
             {"u_reset_mv", [](Parsed& p, const Value& v) { p.cfg.lif.u_reset = as_double(v); }},
             {"tau_m_ms", [](Parsed& p, const Value& v) { p.cfg.lif.tau_m = as_positive(v); }},
             {"c_m_pf", [](Parsed& p, const Value& v) { p.cfg.lif.c_m = as_positive(v); }},
             {"t_ref_ms", [](Parsed& p, const Value& v) { p.cfg.lif.t_ref = as_nonnegative(v); }},
         }},
        {"topology",
         {
             {"kind",
              [](Parsed& p, const Value& v) {
                  if (v.text == "layered") p.cfg.topology = TopologyKind::layered;
                  else if (v.text == "lsm") p.cfg.topology = TopologyKind::lsm;
                  else v.fail("expected layered or lsm");
              }},
             {"layers",
              [](Parsed& p, const Value& v) {
                  p.cfg.layers.clear();
                  for (const auto& item : split_list(v)) p.cfg.layers.push_back(as_count(item));
                  if (p.cfg.layers.size() < 2) v.violate("need at least two layers");
              }},
             {"n_in", [](Parsed& p, const Value& v) { p.cfg.lsm.n_in = as_count(v); }},
             {"n_liquid", [](Parsed& p, const Value& v) { p.cfg.lsm.n_liquid = as_count(v); }},
             {"n_out", [](Parsed& p, const Value& v) { p.cfg.lsm.n_out = as_count(v); }},
             {"k_rec", [](Parsed& p, const Value& v) { p.cfg.lsm.k_rec = as_count(v); }},
             {"n_inh", [](Parsed& p, const Value& v) { p.cfg.lsm.n_inh = static_cast<std::size_t>(as_uint(v)); }},
             {"w_direct", [](Parsed& p, const Value& v) { p.cfg.lsm.w_direct = as_nonnegative(v); }},
         }},
        {"init",
         {
             {"method",
              [](Parsed& p, const Value& v) {
                  p.method_names.clear();
                  std::set<std::string_view> seen;
                  for (const auto& item : split_list(v)) {
                      if (item.text != "uniform" && item.text != "barabasi_albert" && item.text != "erdos_renyi") {
                          item.fail("unknown method '" + std::string(item.text) +
                                    "' (uniform, barabasi_albert, erdos_renyi)");
                      }
                      if (!seen.insert(item.text).second) item.violate("method listed twice");
                      p.method_names.emplace_back(std::string(item.text), item);
                  }
              }},
             {"ba_nodes", [](Parsed& p, const Value& v) { p.ba.n = as_count(v); }},
             {"ba_m", [](Parsed& p, const Value& v) { p.ba.m = as_count(v); }},
             {"er_nodes", [](Parsed& p, const Value& v) { p.er.n = as_count(v); }},
             {"er_p",
              [](Parsed& p, const Value& v) {
                  const double x = as_double(v);
                  if (!(x >= 0.0 && x <= 1.0)) v.violate("er_p must lie in [0, 1]");
                  p.er_p = x;
              }},
         }},
        {"sweep",
         {
             {"ranges",
              [](Parsed& p, const Value& v) {
                  p.cfg.ranges.clear();
                  for (const auto& item : split_list(v)) p.cfg.ranges.push_back(as_range(item));
              }},
             {"epochs", [](Parsed& p, const Value& v) { p.cfg.epochs = as_count(v); }},
             {"seeds",
              [](Parsed& p, const Value& v) {
                  p.cfg.seeds.clear();
                  for (const auto& item : split_list(v)) p.cfg.seeds.push_back(as_uint(item));
              }},
             {"threads",
              [](Parsed& p, const Value& v) {
                  const auto t = as_uint(v);
                  if (t > 4096) v.violate("threads must be <= 4096");
                  p.cfg.threads = static_cast<int>(t);
              }},
         }},
        {"metrics",
         {
             {"vp_q_per_ms", [](Parsed& p, const Value& v) { p.cfg.vp_q = as_nonnegative(v); }},
             {"vr_tau_ms", [](Parsed& p, const Value& v) { p.cfg.vr_tau = as_positive(v); }},
         }},
        {"stdp",
         {
             {"a_plus", [](Parsed& p, const Value& v) { p.cfg.stdp.a_plus = as_nonnegative(v); }},
             {"a_minus", [](Parsed& p, const Value& v) { p.cfg.stdp.a_minus = as_nonnegative(v); }},
             {"tau_plus_ms", [](Parsed& p, const Value& v) { p.cfg.stdp.tau_plus = as_positive(v); }},
             {"tau_minus_ms", [](Parsed& p, const Value& v) { p.cfg.stdp.tau_minus = as_positive(v); }},
             {"w_floor", [](Parsed& p, const Value& v) { p.cfg.stdp.w_floor = as_double(v); }},
             {"w_ceiling", [](Parsed& p, const Value& v) { p.cfg.stdp_w_ceiling = as_double(v); }},
         }},
    };
    return g;
}

// Cross-key checks are reported at the last line of the section involved.
template <class F>
void check_section(const Parsed& p, const char* section, F&& check)
{
    try {
        check();
    } catch (const std::invalid_argument& e) {
        const auto it = p.section_line.find(section);
        const int line = it == p.section_line.end() ? 0 : it->second;
        throw ConfigError(ConfigErrorKind::invariant, line, 1, std::string("[") + section + "] " + e.what());
    }
}

} // namespace

SweepConfig parse_config(std::string_view text)
{
    Parsed p;
    const auto& g = grammar();
    const std::map<std::string, Setter>* section = nullptr;
    std::string section_name;
    std::set<std::string> seen_keys;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto line = trim(raw);
        if (line.empty()) continue;
        const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(ConfigErrorKind::syntax, line_no, indent + static_cast<int>(line.size()),
                                  "section header must end with ']'");
            }
            section_name = std::string(trim(line.substr(1, line.size() - 2)));
            const auto it = g.find(section_name);
            if (it == g.end()) {
                throw ConfigError(ConfigErrorKind::unknown_section, line_no, indent + 1,
                                  "'" + section_name + "' (expected simulation, topology, init, sweep, metrics or stdp)");
            }
            section = &it->second;
            p.section_line[section_name] = line_no;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(ConfigErrorKind::syntax, line_no, indent, "expected 'key = value' or '[section]'");
        }
        const auto key = std::string(trim(line.substr(0, eq)));
        if (key.empty()) throw ConfigError(ConfigErrorKind::syntax, line_no, indent, "missing key before '='");
        if (key.find_first_of(" \t") != std::string::npos) {
            throw ConfigError(ConfigErrorKind::syntax, line_no, indent, "key contains whitespace");
        }
        if (!section) {
            throw ConfigError(ConfigErrorKind::syntax, line_no, indent, "key '" + key + "' outside any [section]");
        }
        const auto setter = section->find(key);
        if (setter == section->end()) {
            throw ConfigError(ConfigErrorKind::unknown_key, line_no, indent,
                              "'" + key + "' in [" + section_name + "]");
        }
        if (!seen_keys.insert(section_name + "." + key).second) {
            throw ConfigError(ConfigErrorKind::syntax, line_no, indent, "duplicate key '" + key + "'");
        }
        const auto after = line.substr(eq + 1);
        const auto value = trim(after);
        const int vcol = indent + static_cast<int>(eq) + 1 +
                         static_cast<int>(after.find_first_not_of(" \t") == std::string_view::npos
                                              ? 0 : after.find_first_not_of(" \t"));
        if (value.empty()) throw ConfigError(ConfigErrorKind::bad_value, line_no, vcol, "empty value for '" + key + "'");
        setter->second(p, Value{value, line_no, vcol});
        p.section_line[section_name] = line_no;
    }

    auto& cfg = p.cfg;
    std::vector<std::string> names;
    for (const auto& m : cfg.methods) names.emplace_back(method_name(m));
    if (!p.method_names.empty()) {
        names.clear();
        for (const auto& entry : p.method_names) names.push_back(entry.first);
    }
    cfg.methods.clear();
    for (const auto& name : names) {
        if (name == "uniform") cfg.methods.emplace_back(UniformRandom{});
        else if (name == "barabasi_albert") cfg.methods.emplace_back(p.ba);
        else cfg.methods.emplace_back(ErdosRenyi{p.er.n, 0.0});
    }
    check_section(p, "init", [&] {
        const double er_p = p.er_p ? *p.er_p : matched_er_probability(p.er.n, p.ba.m);
        for (auto& m : cfg.methods) {
            if (auto* er = std::get_if<ErdosRenyi>(&m)) er->p = er_p;
            validate(m);
        }
        if (p.er.n < 2) throw std::invalid_argument("er_nodes must be >= 2");
    });
    check_section(p, "simulation", [&] {
        cfg.lif.validate();
        cfg.stimulus.validate();
    });
    check_section(p, "topology", [&] {
        if (cfg.topology == TopologyKind::lsm) {
            if (cfg.lsm.n_liquid < 2 || cfg.lsm.k_rec >= cfg.lsm.n_liquid) {
                throw std::invalid_argument("LSM requires n_liquid >= 2 and k_rec < n_liquid");
            }
            if (cfg.lsm.inhibitory_count() > cfg.lsm.n_liquid * cfg.lsm.k_rec) {
                throw std::invalid_argument("n_inh exceeds the number of liquid synapses");
            }
        }
    });
    check_section(p, "stdp", [&] {
        StdpParams probe = cfg.stdp;
        probe.w_ceiling = cfg.stdp_w_ceiling.value_or(std::numeric_limits<double>::infinity());
        probe.validate();
    });
    return cfg;
}

namespace {

std::string d17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += fmt(xs[i]);
    }
    return s;
}

} // namespace

std::string serialize_config(const SweepConfig& c)
{
    BarabasiAlbert ba{};
    ErdosRenyi er{};
    for (const auto& m : c.methods) {
        if (const auto* x = std::get_if<BarabasiAlbert>(&m)) ba = *x;
        if (const auto* x = std::get_if<ErdosRenyi>(&m)) er = *x;
    }
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };

    std::string s;
    s += "[simulation]\n";
    s += "dt_ms = " + d17(c.dt) + "\n";
    s += "duration_ms = " + d17(c.duration) + "\n";
    s += "plasticity = " + b(c.plasticity) + "\n";
    s += std::string("stim_kind = ") + (c.stimulus.kind == StimulusKind::regular ? "regular" : "poisson") + "\n";
    s += "stim_rate_hz = " + d17(c.stimulus.rate) + "\n";
    s += "stim_seed = " + std::to_string(c.stimulus.seed) + "\n";
    s += "stim_amplitude_pa = " + d17(c.stimulus.amplitude) + "\n";
    s += "stim_stagger = " + b(c.stimulus.stagger) + "\n";
    s += "kappa_mv = " + d17(c.lif.kappa) + "\n";
    s += "u_rest_mv = " + d17(c.lif.u_rest) + "\n";
    s += "u_th_mv = " + d17(c.lif.u_th) + "\n";
    s += "u_reset_mv = " + d17(c.lif.u_reset) + "\n";
    s += "tau_m_ms = " + d17(c.lif.tau_m) + "\n";
    s += "c_m_pf = " + d17(c.lif.c_m) + "\n";
    s += "t_ref_ms = " + d17(c.lif.t_ref) + "\n";
    s += "\n[topology]\n";
    s += std::string("kind = ") + (c.topology == TopologyKind::layered ? "layered" : "lsm") + "\n";
    s += "layers = " + join(c.layers, [](std::size_t x) { return std::to_string(x); }) + "\n";
    s += "n_in = " + std::to_string(c.lsm.n_in) + "\n";
    s += "n_liquid = " + std::to_string(c.lsm.n_liquid) + "\n";
    s += "n_out = " + std::to_string(c.lsm.n_out) + "\n";
    s += "k_rec = " + std::to_string(c.lsm.k_rec) + "\n";
    if (c.lsm.n_inh) s += "n_inh = " + std::to_string(*c.lsm.n_inh) + "\n";
    if (c.lsm.w_direct) s += "w_direct = " + d17(*c.lsm.w_direct) + "\n";
    s += "\n[init]\n";
    s += "method = " + join(c.methods, [](const InitMethod& m) { return std::string(method_name(m)); }) + "\n";
    s += "ba_nodes = " + std::to_string(ba.n) + "\n";
    s += "ba_m = " + std::to_string(ba.m) + "\n";
    s += "er_nodes = " + std::to_string(er.n) + "\n";
    s += "er_p = " + d17(er.p) + "\n";
    s += "\n[sweep]\n";
    s += "ranges = " + join(c.ranges, [](const WeightRange& r) { return d17(r.low) + ":" + d17(r.high); }) + "\n";
    s += "epochs = " + std::to_string(c.epochs) + "\n";
    s += "seeds = " + join(c.seeds, [](std::uint64_t x) { return std::to_string(x); }) + "\n";
    s += "threads = " + std::to_string(c.threads) + "\n";
    s += "\n[metrics]\n";
    s += "vp_q_per_ms = " + d17(c.vp_q) + "\n";
    s += "vr_tau_ms = " + d17(c.vr_tau) + "\n";
    s += "\n[stdp]\n";
    s += "a_plus = " + d17(c.stdp.a_plus) + "\n";
    s += "a_minus = " + d17(c.stdp.a_minus) + "\n";
    s += "tau_plus_ms = " + d17(c.stdp.tau_plus) + "\n";
    s += "tau_minus_ms = " + d17(c.stdp.tau_minus) + "\n";
    s += "w_floor = " + d17(c.stdp.w_floor) + "\n";
    if (c.stdp_w_ceiling) s += "w_ceiling = " + d17(*c.stdp_w_ceiling) + "\n";
    return s;
}

} // namespace spikesweep
