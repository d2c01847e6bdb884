#pragma once

// Four-way oracle ablation: the same seed set is run with language and
// vision modules independently swapped for ground truth, so row deltas
// attribute end-to-end error to individual modules.

#include <array>
#include <string>
#include <vector>

#include "lav/episode.hpp"
#include "lav/metrics.hpp"

namespace lav {

struct AblationConfig {
    HarnessConfig harness;
    std::uint64_t seed_begin = 1;
    std::uint64_t seed_end = 500; // inclusive
    NavKind nav = NavKind::Dfs;
};

inline constexpr int kAblationRows = 4;

inline const std::array<const char*, kAblationRows>& ablation_row_names() {
    static const std::array<const char*, kAblationRows> names = {
        "L & V Oracles", "V Oracle", "L Oracle", "LAV"};
    return names;
}

inline RunOptions ablation_row_options(int row, NavKind nav) {
    RunOptions opts;
    opts.nav = nav;
    switch (row) {
        case 0: opts.oracle_language = true; opts.oracle_vision = true; break;
        case 1: opts.oracle_language = false; opts.oracle_vision = true; break;
        case 2: opts.oracle_language = true; opts.oracle_vision = false; break;
        default: opts.oracle_language = false; opts.oracle_vision = false; break;
    }
    return opts;
}

struct AblationResult {
    std::array<MetricsReport, kAblationRows> rows;
    std::array<std::vector<EpisodeTrace>, kAblationRows> traces;
    bool seed_count_warning = false; // fewer than 100 shared seeds
};

inline AblationResult run_ablation(const AblationConfig& config,
                                   const Lexicon& lexicon = default_lexicon()) {
    if (config.seed_end < config.seed_begin)
        throw std::invalid_argument("empty seed range");
    AblationResult result;
    result.seed_count_warning = config.seed_end - config.seed_begin + 1 < 100;
    for (int row = 0; row < kAblationRows; ++row) {
        RunOptions opts = ablation_row_options(row, config.nav);
        std::vector<EpisodeTrace>& traces = result.traces[static_cast<std::size_t>(row)];
        for (std::uint64_t seed = config.seed_begin; seed <= config.seed_end; ++seed)
            traces.push_back(run_episode(seed, config.harness, opts, lexicon));
        result.rows[static_cast<std::size_t>(row)] = compute_metrics(traces);
    }
    return result;
}

inline std::string ablation_table(const AblationResult& result) {
    std::vector<std::pair<std::string, MetricsReport>> rows;
    for (int i = 0; i < kAblationRows; ++i)
        rows.emplace_back(ablation_row_names()[static_cast<std::size_t>(i)],
                          result.rows[static_cast<std::size_t>(i)]);
    return metrics_table(rows);
}

inline std::string ablation_csv(const AblationResult& result) {
    std::string out = metrics_csv_header() + "\n";
    for (int i = 0; i < kAblationRows; ++i)
        out += metrics_csv_row(ablation_row_names()[static_cast<std::size_t>(i)],
                               result.rows[static_cast<std::size_t>(i)]) +
               "\n";
    return out;
}

} // namespace lav
