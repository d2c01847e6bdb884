#pragma once

// Episode-set metrics: success rate, goal-condition rate, and their
// path-weighted variants, plus a failure-reason histogram.

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/trace.hpp"

namespace lav {

// Weighs a score by L*/max(L*, L): paths longer than the reference decay
// the score, faster-than-reference paths are not rewarded beyond it.
inline double path_weighted(double score, int steps_taken, int expert_steps) {
    if (expert_steps < 1) throw std::invalid_argument("expert path length must be >= 1");
    if (steps_taken < 0) throw std::invalid_argument("steps taken must be >= 0");
    return score * static_cast<double>(expert_steps) /
           static_cast<double>(std::max(expert_steps, steps_taken));
}

struct MetricsReport {
    double sr = 0.0;   // percent of fully successful episodes
    double pwsr = 0.0; // path-weighted SR
    double gc = 0.0;   // mean goal-condition fraction, percent
    double pwgc = 0.0; // path-weighted GC
    int episodes = 0;
    std::map<std::string, int> failure_histogram;
};

inline MetricsReport compute_metrics(const std::vector<EpisodeTrace>& traces) {
    if (traces.empty()) throw std::invalid_argument("no traces to aggregate");
    MetricsReport report;
    report.episodes = static_cast<int>(traces.size());
    double sr = 0, pwsr = 0, gc = 0, pwgc = 0;
    for (const EpisodeTrace& t : traces) {
        double success = t.success ? 1.0 : 0.0;
        double fraction = t.goal_fraction();
        sr += success;
        gc += fraction;
        pwsr += path_weighted(success, t.steps_taken, t.lstar);
        pwgc += path_weighted(fraction, t.steps_taken, t.lstar);
        if (!t.success) ++report.failure_histogram[t.failure_reason];
    }
    double n = static_cast<double>(report.episodes);
    report.sr = 100.0 * sr / n;
    report.pwsr = 100.0 * pwsr / n;
    report.gc = 100.0 * gc / n;
    report.pwgc = 100.0 * pwgc / n;
    return report;
}

inline std::string metrics_csv_header() { return "label,episodes,SR,PWSR,GC,PWGC"; }

inline std::string metrics_csv_row(const std::string& label, const MetricsReport& r) {
    std::ostringstream os;
    os << label << "," << r.episodes << "," << std::fixed << std::setprecision(4) << r.sr
       << "," << r.pwsr << "," << r.gc << "," << r.pwgc;
    return os.str();
}

// Aligned plain-text table, one row per labeled report.
inline std::string metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& rows) {
    std::size_t label_width = 5;
    for (const auto& [label, r] : rows) label_width = std::max(label_width, label.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(label_width + 2)) << "" << std::right
       << std::setw(7) << "SR" << std::setw(7) << "PWSR" << std::setw(7) << "GC"
       << std::setw(7) << "PWGC" << "\n";
    for (const auto& [label, r] : rows) {
        os << std::left << std::setw(static_cast<int>(label_width + 2)) << label << std::right
           << std::fixed << std::setprecision(1) << std::setw(7) << r.sr << std::setw(7)
           << r.pwsr << std::setw(7) << r.gc << std::setw(7) << r.pwgc << "\n";
    }
    return os.str();
}

} // namespace lav
