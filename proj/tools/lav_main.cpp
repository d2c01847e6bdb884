// Command-line front end: `gen` writes task bundles, `run` executes
// episodes and reports metrics, `ablate` produces the four-row oracle
// table. All outputs are plain text.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lav/lav.hpp"

namespace fs = std::filesystem;

namespace {

struct SeedRange {
    std::uint64_t begin = 1;
    std::uint64_t end = 100;
};

bool parse_seed_range(const std::string& text, SeedRange& out) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        out.begin = std::stoull(text.substr(0, pos));
        out.end = std::stoull(text.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return out.end >= out.begin;
}

std::string seed_tag(std::uint64_t seed) {
    std::ostringstream os;
    os << std::setw(6) << std::setfill('0') << seed;
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string task_record(const lav::GeneratedTask& gt, lav::ParaphraseLevel level) {
    std::ostringstream os;
    os << "seed=" << gt.seed << " shape=" << lav::task_shape_name(gt.shape)
       << " target=" << lav::object_type_name(gt.target) << " dest=";
    if (gt.shape == lav::TaskShape::Toggle)
        os << "-";
    else
        os << lav::object_type_name(gt.destination);
    os << " conditions=";
    for (std::size_t i = 0; i < gt.task.goal_conditions.size(); ++i) {
        if (i) os << ";";
        os << gt.task.goal_conditions[i].to_string();
    }
    os << " lstar=" << gt.task.expert_path_length << " level="
       << lav::paraphrase_level_name(level) << " plan=" << to_string(gt.ground_truth_plan)
       << " instruction=" << gt.instruction.text;
    return os.str();
}

lav::HarnessConfig load_config_opt(const std::string& path) {
    if (path.empty()) return lav::HarnessConfig{};
    return lav::load_config_file(path);
}

lav::Lexicon load_lexicon_opt(const std::string& path) {
    if (path.empty()) return lav::default_lexicon();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return lav::parse_lexicon(buf.str());
}

int cmd_gen(const SeedRange& seeds, const std::string& config_path,
            const std::string& out_dir, bool dump_scene) {
    lav::HarnessConfig config = load_config_opt(config_path);
    fs::create_directories(out_dir);
    for (std::uint64_t seed = seeds.begin; seed <= seeds.end; ++seed) {
        lav::GeneratedTask gt = lav::generate_bundle(seed, config.gen);
        write_file(fs::path(out_dir) / ("seed_" + seed_tag(seed) + ".task"),
                   task_record(gt, config.gen.paraphrase_level) + "\n");
        write_file(fs::path(out_dir) / ("seed_" + seed_tag(seed) + ".scene"),
                   lav::serialize_scene(gt.scene));
        if (dump_scene) std::cout << lav::serialize_scene(gt.scene);
    }
    std::cout << "wrote " << (seeds.end - seeds.begin + 1) << " task bundles to " << out_dir
              << "\n";
    return 0;
}

int cmd_run(const SeedRange& seeds, const std::string& config_path,
            const std::string& out_dir, const lav::RunOptions& opts,
            const std::string& lexicon_path) {
    lav::HarnessConfig config = load_config_opt(config_path);
    lav::Lexicon lexicon = load_lexicon_opt(lexicon_path);
    fs::create_directories(out_dir);

    std::vector<lav::EpisodeTrace> traces;
    for (std::uint64_t seed = seeds.begin; seed <= seeds.end; ++seed) {
        traces.push_back(lav::run_episode(seed, config, opts, lexicon));
        write_file(fs::path(out_dir) / ("trace_" + seed_tag(seed) + ".trace"),
                   lav::serialize_trace(traces.back()));
    }

    // Seed-parity pools stand in for a seen/unseen split.
    std::vector<lav::EpisodeTrace> seen_like, unseen_like;
    for (const auto& t : traces)
        (t.seed % 2 == 0 ? seen_like : unseen_like).push_back(t);

    std::vector<std::pair<std::string, lav::MetricsReport>> rows;
    rows.emplace_back("all", lav::compute_metrics(traces));
    if (!seen_like.empty()) rows.emplace_back("seen_like", lav::compute_metrics(seen_like));
    if (!unseen_like.empty())
        rows.emplace_back("unseen_like", lav::compute_metrics(unseen_like));

    std::string csv = lav::metrics_csv_header() + "\n";
    for (const auto& [label, report] : rows) csv += lav::metrics_csv_row(label, report) + "\n";
    write_file(fs::path(out_dir) / "metrics.csv", csv);
    std::string table = lav::metrics_table(rows);
    write_file(fs::path(out_dir) / "metrics.txt", table);
    std::cout << table;

    const auto& all = rows.front().second;
    if (!all.failure_histogram.empty()) {
        std::cout << "failures:";
        for (const auto& [reason, count] : all.failure_histogram)
            std::cout << " " << reason << "=" << count;
        std::cout << "\n";
    }
    return 0;
}

int cmd_ablate(const SeedRange& seeds, const std::string& config_path,
               const std::string& out_dir, const std::string& nav_name) {
    lav::AblationConfig config;
    config.harness = load_config_opt(config_path);
    config.seed_begin = seeds.begin;
    config.seed_end = seeds.end;
    config.nav = nav_name == "expert" ? lav::NavKind::Expert : lav::NavKind::Dfs;
    if (seeds.end - seeds.begin + 1 < 100)
        std::cerr << "warning: fewer than 100 seeds; ablation deltas will be noisy\n";

    lav::AblationResult result = lav::run_ablation(config);
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "ablation.csv", lav::ablation_csv(result));
    std::string table = lav::ablation_table(result);
    write_file(fs::path(out_dir) / "ablation.txt", table);
    std::cout << table;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale instruction-following testbed: grid household simulator "
                 "with swappable language, vision, and action modules"};
    app.require_subcommand(1);

    std::string seeds_text = "1..100";
    std::string config_path;
    std::string out_dir = "out";
    std::string lexicon_path;
    std::string nav_name = "dfs";
    bool dump_scene = false;
    bool oracle_language = false;
    bool oracle_vision = false;

    auto* gen = app.add_subcommand("gen", "Generate scene/task/instruction bundles");
    gen->add_option("--seeds", seeds_text, "Seed range A..B (inclusive)");
    gen->add_option("--config", config_path, "Config file (key value per line)");
    gen->add_option("--out", out_dir, "Output directory")->required();
    gen->add_flag("--dump-scene", dump_scene, "Also print scene maps to stdout");

    auto* run = app.add_subcommand("run", "Run episodes and report metrics");
    run->add_option("--seeds", seeds_text, "Seed range A..B (inclusive)");
    run->add_option("--config", config_path, "Config file (key value per line)");
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--lexicon", lexicon_path, "Override the built-in lexicon/grammar");
    run->add_option("--nav", nav_name, "Navigator: dfs or expert")
        ->check(CLI::IsMember({"dfs", "expert"}));
    run->add_flag("--oracle-language", oracle_language,
                  "Use the ground-truth plan instead of parsing");
    run->add_flag("--oracle-vision", oracle_vision, "Zero-noise perception");

    auto* ablate = app.add_subcommand("ablate", "Run the four-way oracle ablation");
    ablate->add_option("--seeds", seeds_text, "Seed range A..B (inclusive)");
    ablate->add_option("--config", config_path, "Config file (key value per line)");
    ablate->add_option("--out", out_dir, "Output directory")->required();
    ablate->add_option("--nav", nav_name, "Navigator: dfs or expert")
        ->check(CLI::IsMember({"dfs", "expert"}));

    CLI11_PARSE(app, argc, argv);

    SeedRange seeds;
    if (!parse_seed_range(seeds_text, seeds)) {
        std::cerr << "bad seed range '" << seeds_text << "', expected A..B\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(seeds, config_path, out_dir, dump_scene);
        if (run->parsed()) {
            lav::RunOptions opts;
            opts.oracle_language = oracle_language;
            opts.oracle_vision = oracle_vision;
            opts.nav = nav_name == "expert" ? lav::NavKind::Expert : lav::NavKind::Dfs;
            return cmd_run(seeds, config_path, out_dir, opts, lexicon_path);
        }
        if (ablate->parsed()) return cmd_ablate(seeds, config_path, out_dir, nav_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
