#pragma once

#include <string>
#include <vector>

#include "spikesweep/experiment.hpp"

namespace spikesweep {

inline constexpr const char* records_header = "run_id,seed,method,w_low,w_high,epoch,vp,vr";
inline constexpr const char* summary_header =
    "method,w_low,w_high,vp_min,vp_mean,vp_std,vr_min,vr_mean,vr_std";

/// printf("%.6g").
std::string format_g6(double v);

/// Rows are sorted by (method, w_low, w_high, seed, epoch) before writing.
std::string format_records_csv(std::vector<SweepRecord> records);
std::string format_summary_csv(const Summary& summary);
std::vector<SweepRecord> parse_records_csv(const std::string& text);

void write_csv(const std::vector<SweepRecord>& records, const std::string& path);
void write_summary_csv(const Summary& summary, const std::string& path);
std::vector<SweepRecord> read_csv(const std::string& path);

enum class PlotMetric { vp, vr };

/// SVG scatter of distance against range midpoint, one colour per method,
/// with a line through the per-range means. Each record is one
/// <circle class="marker"> element.
std::string render_plot(const std::vector<SweepRecord>& records, PlotMetric metric);
void emit_plot(const std::vector<SweepRecord>& records, PlotMetric metric, const std::string& path);

/// Writes a whole file; throws std::runtime_error naming the path on failure.
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

} // namespace spikesweep
