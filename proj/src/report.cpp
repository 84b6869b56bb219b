#include "spikesweep/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spikesweep {

std::string format_g6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_records_csv(std::vector<SweepRecord> records)
{
    sort_records(records);
    std::string out = records_header;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.run_id) + ',' + std::to_string(r.seed) + ',' + r.method + ',' +
               format_g6(r.w_low) + ',' + format_g6(r.w_high) + ',' + std::to_string(r.epoch) + ',' +
               format_g6(r.vp) + ',' + format_g6(r.vr) + '\n';
    }
    return out;
}

std::string format_summary_csv(const Summary& summary)
{
    std::string out = summary_header;
    out += '\n';
    for (const auto& c : summary.cells) {
        out += c.method + ',' + format_g6(c.range.low) + ',' + format_g6(c.range.high) + ',' +
               format_g6(c.vp_min) + ',' + format_g6(c.vp_mean) + ',' + format_g6(c.vp_std) + ',' +
               format_g6(c.vr_min) + ',' + format_g6(c.vr_mean) + ',' + format_g6(c.vr_std) + '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

template <class T>
T parse_field(const std::string& s, int line)
{
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::runtime_error("records CSV line " + std::to_string(line) + ": bad field '" + s + "'");
    }
    return v;
}

} // namespace

std::vector<SweepRecord> parse_records_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != records_header) {
        throw std::runtime_error("records CSV: missing or wrong header");
    }
    std::vector<SweepRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 8) throw std::runtime_error("records CSV line " + std::to_string(line_no) + ": expected 8 fields");
        SweepRecord r;
        r.run_id = parse_field<std::uint64_t>(f[0], line_no);
        r.seed = parse_field<std::uint64_t>(f[1], line_no);
        r.method = f[2];
        r.w_low = parse_field<double>(f[3], line_no);
        r.w_high = parse_field<double>(f[4], line_no);
        r.epoch = parse_field<std::uint64_t>(f[5], line_no);
        r.vp = parse_field<double>(f[6], line_no);
        r.vr = parse_field<double>(f[7], line_no);
        out.push_back(std::move(r));
    }
    return out;
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path)
{
    write_text_file(path, format_records_csv(records));
}

void write_summary_csv(const Summary& summary, const std::string& path)
{
    write_text_file(path, format_summary_csv(summary));
}

std::vector<SweepRecord> read_csv(const std::string& path)
{
    return parse_records_csv(read_text_file(path));
}

namespace {

constexpr double plot_w = 640, plot_h = 400;
constexpr double margin_l = 70, margin_r = 150, margin_t = 30, margin_b = 55;
constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_plot(const std::vector<SweepRecord>& records, PlotMetric metric)
{
    if (records.empty()) throw std::invalid_argument("render_plot: no records");
    auto sorted = records;
    sort_records(sorted);
    auto value = [metric](const SweepRecord& r) { return metric == PlotMetric::vp ? r.vp : r.vr; };

    double x0 = 1e300, x1 = -1e300, y1 = 0.0;
    for (const auto& r : sorted) {
        const double x = 0.5 * (r.w_low + r.w_high);
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y1 = std::max(y1, value(r));
    }
    if (x1 - x0 < 1e-12) { x0 -= 1.0; x1 += 1.0; }
    if (y1 <= 0.0) y1 = 1.0;
    const double pw = plot_w - margin_l - margin_r, ph = plot_h - margin_t - margin_b;
    auto sx = [&](double x) { return margin_l + (x - x0) / (x1 - x0) * pw; };
    auto sy = [&](double y) { return margin_t + ph - y / y1 * ph; };

    const char* label = metric == PlotMetric::vp ? "Victor-Purpura distance" : "van Rossum distance";
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" viewBox=\"0 0 " + num(plot_w) + " " + num(plot_h) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) + "\" fill=\"white\"/>\n";
    svg += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    svg += "<line x1=\"" + num(margin_l) + "\" y1=\"" + num(margin_t + ph) + "\" x2=\"" + num(margin_l + pw) +
           "\" y2=\"" + num(margin_t + ph) + "\"/>\n";
    svg += "<line x1=\"" + num(margin_l) + "\" y1=\"" + num(margin_t) + "\" x2=\"" + num(margin_l) + "\" y2=\"" +
           num(margin_t + ph) + "\"/>\n</g>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4.0, yv = y1 * k / 4.0;
        svg += "<text class=\"tick\" x=\"" + num(sx(xv)) + "\" y=\"" + num(margin_t + ph + 16) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + format_g6(xv) + "</text>\n";
        svg += "<text class=\"tick\" x=\"" + num(margin_l - 6) + "\" y=\"" + num(sy(yv) + 3) +
               "\" font-size=\"10\" text-anchor=\"end\">" + format_g6(yv) + "</text>\n";
    }
    svg += "<text class=\"xlabel\" x=\"" + num(margin_l + pw / 2) + "\" y=\"" + num(plot_h - 12) +
           "\" font-size=\"12\" text-anchor=\"middle\">weight (range midpoint)</text>\n";
    svg += "<text class=\"ylabel\" x=\"16\" y=\"" + num(margin_t + ph / 2) + "\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " + num(margin_t + ph / 2) + ")\">" + label + "</text>\n";

    std::vector<std::string> methods;
    for (const auto& r : sorted)
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);

    for (std::size_t m = 0; m < methods.size(); ++m) {
        const char* colour = palette[m % std::size(palette)];
        std::map<double, std::pair<double, std::size_t>> means;
        svg += "<g class=\"series\" data-method=\"" + methods[m] + "\" fill=\"" + colour + "\">\n";
        for (const auto& r : sorted) {
            if (r.method != methods[m]) continue;
            const double x = 0.5 * (r.w_low + r.w_high);
            auto& acc = means[x];
            acc.first += value(r);
            ++acc.second;
            svg += "<circle class=\"marker\" cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(value(r))) + "\" r=\"2.5\"/>\n";
        }
        svg += "</g>\n";
        if (means.size() > 1) {
            svg += "<polyline class=\"mean\" fill=\"none\" stroke=\"" + std::string(colour) + "\" points=\"";
            bool first = true;
            for (const auto& [x, acc] : means) {
                if (!first) svg += ' ';
                first = false;
                svg += num(sx(x)) + "," + num(sy(acc.first / static_cast<double>(acc.second)));
            }
            svg += "\"/>\n";
        }
        const double ly = margin_t + 14.0 * static_cast<double>(m);
        svg += "<text class=\"legend\" x=\"" + num(plot_w - margin_r + 14) + "\" y=\"" + num(ly + 4) +
               "\" font-size=\"11\" fill=\"" + colour + "\">" + methods[m] + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void emit_plot(const std::vector<SweepRecord>& records, PlotMetric metric, const std::string& path)
{
    write_text_file(path, render_plot(records, metric));
}

} // namespace spikesweep
