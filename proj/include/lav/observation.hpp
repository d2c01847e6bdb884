#pragma once

// Egocentric observation: a fan of rays across the agent's forward field
// of view. Rays are sampled at unit distance steps; the first blocked
// cell terminates the ray, so anything behind it stays hidden.

#include <cmath>
#include <optional>
#include <vector>

#include "lav/geometry.hpp"
#include "lav/objects.hpp"
#include "lav/scene.hpp"

namespace lav {

struct ObsConfig {
    int rays = 21;
    double fov_deg = 90.0;
    int max_depth = 15;

    friend bool operator==(const ObsConfig&, const ObsConfig&) = default;
};

struct RayHit {
    int depth = 0;                    // cells, in [1, max_depth]
    std::optional<ObjectType> label;  // empty for walls and clear rays
    bool obstacle = false;            // something solid at distance 1

    friend bool operator==(const RayHit&, const RayHit&) = default;
};

struct Observation {
    std::vector<RayHit> rays;
    ObsConfig config;
};

// Direction of ray `index`, rotated from the agent heading. Index 0 is the
// leftmost ray, the middle index looks straight ahead.
inline Vec2 ray_direction(Heading heading, const ObsConfig& cfg, int index) {
    double fov = cfg.fov_deg * 3.14159265358979323846 / 180.0;
    double phi = cfg.rays > 1 ? -fov / 2.0 + fov * index / (cfg.rays - 1) : 0.0;
    return rotate(heading_vec(heading), phi);
}

// Cell containing the point `depth` cells along ray `index` from the agent
// cell center. Inverts the sampling used by render_observation.
inline Cell ray_endpoint_cell(const AgentState& agent, const ObsConfig& cfg, int index,
                              int depth) {
    Vec2 dir = ray_direction(agent.heading, cfg, index);
    double px = agent.cell.x + 0.5 + dir.x * depth;
    double py = agent.cell.y + 0.5 + dir.y * depth;
    return {static_cast<int>(std::floor(px)), static_cast<int>(std::floor(py))};
}

inline Observation render_observation(const Scene& scene, const ObsConfig& cfg = {}) {
    Observation obs;
    obs.config = cfg;
    obs.rays.resize(cfg.rays);
    for (int r = 0; r < cfg.rays; ++r) {
        RayHit hit;
        hit.depth = cfg.max_depth;
        for (int k = 1; k <= cfg.max_depth; ++k) {
            Cell c = ray_endpoint_cell(scene.agent, cfg, r, k);
            if (c == scene.agent.cell) continue;
            if (!scene.in_bounds(c) || scene.is_wall(c)) {
                hit.depth = k;
                break;
            }
            int occ = scene.occupant_id(c);
            if (occ >= 0) {
                hit.depth = k;
                hit.label = scene.find_object(occ)->type;
                break;
            }
        }
        hit.obstacle = hit.depth == 1;
        obs.rays[r] = hit;
    }
    return obs;
}

} // namespace lav
