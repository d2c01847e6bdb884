#pragma once

// Harness configuration: generation, noise, observation, and budget
// settings, loaded from a flat key-value file. The fingerprint stamped
// into traces covers both the config and the per-run options.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lav/observation.hpp"
#include "lav/taskgen.hpp"
#include "lav/vision.hpp"

namespace lav {

struct HarnessConfig {
    GenConfig gen;
    NoiseConfig noise{0.04, 0.12, 0.4, 0};
    ObsConfig obs;
    int failure_cap = 10;    // failed interactions before the episode aborts
    int budget_factor = 20;  // step budget = factor * (width + height)

    friend bool operator==(const HarnessConfig&, const HarnessConfig&) = default;
};

enum class NavKind : std::uint8_t { Dfs, Expert };

inline std::string_view nav_kind_name(NavKind k) {
    return k == NavKind::Dfs ? "dfs" : "expert";
}

struct RunOptions {
    bool oracle_language = false;
    bool oracle_vision = false;
    NavKind nav = NavKind::Dfs;
};

inline std::string serialize_config(const HarnessConfig& c) {
    std::ostringstream os;
    os << "grid_min " << c.gen.grid_min << "\n";
    os << "grid_max " << c.gen.grid_max << "\n";
    os << "object_min " << c.gen.object_min << "\n";
    os << "object_max " << c.gen.object_max << "\n";
    os << "obstacle_density " << c.gen.obstacle_density << "\n";
    os << "paraphrase_level " << paraphrase_level_name(c.gen.paraphrase_level) << "\n";
    static const char* weight_keys[kSubtaskCount] = {
        "weight_pickup", "weight_place", "weight_toggle", "weight_clean",
        "weight_cool",   "weight_heat",  "weight_slice"};
    for (int i = 0; i < kSubtaskCount; ++i)
        os << weight_keys[i] << " " << c.gen.subtask_weights[static_cast<std::size_t>(i)]
           << "\n";
    os << "mislabel_prob " << c.noise.mislabel_prob << "\n";
    os << "miss_prob " << c.noise.miss_prob << "\n";
    os << "depth_sigma " << c.noise.depth_sigma << "\n";
    os << "noise_seed " << c.noise.seed << "\n";
    os << "rays " << c.obs.rays << "\n";
    os << "fov_degrees " << c.obs.fov_deg << "\n";
    os << "max_depth " << c.obs.max_depth << "\n";
    os << "failure_cap " << c.failure_cap << "\n";
    os << "budget_factor " << c.budget_factor << "\n";
    return os.str();
}

inline HarnessConfig parse_config(const std::string& text) {
    HarnessConfig c;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key.empty() || key[0] == '#') continue;
        auto fail = [&](const std::string& why) -> void {
            throw std::runtime_error("config line " + std::to_string(line_no) + ": " + why);
        };
        if (key == "grid_min") ls >> c.gen.grid_min;
        else if (key == "grid_max") ls >> c.gen.grid_max;
        else if (key == "object_min") ls >> c.gen.object_min;
        else if (key == "object_max") ls >> c.gen.object_max;
        else if (key == "obstacle_density") ls >> c.gen.obstacle_density;
        else if (key == "paraphrase_level") {
            std::string level;
            ls >> level;
            auto parsed = paraphrase_level_from_name(level);
            if (!parsed) fail("unknown paraphrase level " + level);
            c.gen.paraphrase_level = *parsed;
        } else if (key == "weight_pickup") ls >> c.gen.subtask_weights[0];
        else if (key == "weight_place") ls >> c.gen.subtask_weights[1];
        else if (key == "weight_toggle") ls >> c.gen.subtask_weights[2];
        else if (key == "weight_clean") ls >> c.gen.subtask_weights[3];
        else if (key == "weight_cool") ls >> c.gen.subtask_weights[4];
        else if (key == "weight_heat") ls >> c.gen.subtask_weights[5];
        else if (key == "weight_slice") ls >> c.gen.subtask_weights[6];
        else if (key == "mislabel_prob") ls >> c.noise.mislabel_prob;
        else if (key == "miss_prob") ls >> c.noise.miss_prob;
        else if (key == "depth_sigma") ls >> c.noise.depth_sigma;
        else if (key == "noise_seed") ls >> c.noise.seed;
        else if (key == "rays") ls >> c.obs.rays;
        else if (key == "fov_degrees") ls >> c.obs.fov_deg;
        else if (key == "max_depth") ls >> c.obs.max_depth;
        else if (key == "failure_cap") ls >> c.failure_cap;
        else if (key == "budget_factor") ls >> c.budget_factor;
        else fail("unknown key " + key);
        if (ls.fail()) fail("bad value for " + key);
    }
    return c;
}

inline HarnessConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

inline std::string config_fingerprint(const HarnessConfig& c, const RunOptions& opts) {
    std::string blob = serialize_config(c);
    blob += "oracle_language ";
    blob += opts.oracle_language ? "1" : "0";
    blob += "\noracle_vision ";
    blob += opts.oracle_vision ? "1" : "0";
    blob += "\nnav ";
    blob += nav_kind_name(opts.nav);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : blob) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace lav
