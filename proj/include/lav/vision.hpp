#pragma once

// Perception: ground-truth rays pushed through a parameterized noise
// channel (mislabel / miss / depth jitter), plus target localization from
// the resulting frame. With all noise at zero this module IS the vision
// oracle: frames equal the rendered observation exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "lav/observation.hpp"
#include "lav/rng.hpp"
#include "lav/scene.hpp"

namespace lav {

struct NoiseConfig {
    double mislabel_prob = 0.0; // object label swapped for a random other type
    double miss_prob = 0.0;     // object label dropped to empty
    double depth_sigma = 0.0;   // cells; rounded jitter, clamped to [1, max_depth]
    std::uint64_t seed = 0;

    bool is_oracle() const {
        return mislabel_prob == 0.0 && miss_prob == 0.0 && depth_sigma == 0.0;
    }

    friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

using ObservedTypeMask = std::uint32_t;

inline ObservedTypeMask type_bit(ObjectType t) {
    return 1u << static_cast<unsigned>(t);
}

inline bool mask_contains(ObservedTypeMask mask, ObjectType t) {
    return (mask & type_bit(t)) != 0;
}

struct PerceptionFrame {
    std::vector<RayHit> rays;
    ObsConfig config;
    // Object types observed so far this episode, including this frame.
    ObservedTypeMask observed_types = 0;
};

// Applies the noise channel to a ground-truth observation. `observed_types`
// accumulates across an episode; the updated set is also stored in the
// returned frame. Draws from `rng` only for the noise sources that are
// enabled, so a zero-noise config consumes no randomness.
inline PerceptionFrame perceive(const Observation& obs, const NoiseConfig& noise, Rng& rng,
                                ObservedTypeMask& observed_types) {
    PerceptionFrame frame;
    frame.config = obs.config;
    frame.rays = obs.rays;
    for (RayHit& ray : frame.rays) {
        if (noise.miss_prob > 0.0 && ray.label && rng.bernoulli(noise.miss_prob))
            ray.label.reset();
        if (noise.mislabel_prob > 0.0 && ray.label && rng.bernoulli(noise.mislabel_prob)) {
            auto types = all_object_types();
            std::size_t shift = 1 + rng.pick_index(kObjectTypeCount - 1);
            std::size_t original = static_cast<std::size_t>(*ray.label);
            ray.label = types[(original + shift) % kObjectTypeCount];
        }
        if (noise.depth_sigma > 0.0) {
            int jitter = static_cast<int>(std::lround(rng.normal(noise.depth_sigma)));
            ray.depth = std::clamp(ray.depth + jitter, 1, obs.config.max_depth);
        }
        ray.obstacle = ray.depth == 1;
        if (ray.label) observed_types |= type_bit(*ray.label);
    }
    frame.observed_types = observed_types;
    return frame;
}

struct TargetEstimate {
    ObjectType target_type = ObjectType::Bowl;
    std::optional<Cell> relative; // grid-aligned offset from the agent cell
    double confidence = 1.0;

    bool present() const { return relative.has_value(); }
};

// Picks the closest ray labeled `target` (ties: most central, then leftmost)
// and converts its (angle, depth) back to a cell offset. Absent when no ray
// carries the label.
inline TargetEstimate locate_target(const PerceptionFrame& frame, ObjectType target,
                                    const AgentState& agent) {
    TargetEstimate est;
    est.target_type = target;
    int best_ray = -1;
    int center = (frame.config.rays - 1) / 2;
    for (int r = 0; r < static_cast<int>(frame.rays.size()); ++r) {
        const RayHit& ray = frame.rays[r];
        if (!ray.label || *ray.label != target) continue;
        if (best_ray < 0) {
            best_ray = r;
            continue;
        }
        const RayHit& best = frame.rays[best_ray];
        if (ray.depth < best.depth ||
            (ray.depth == best.depth &&
             std::abs(r - center) < std::abs(best_ray - center))) {
            best_ray = r;
        }
    }
    if (best_ray < 0) return est;

    Cell chosen =
        ray_endpoint_cell(agent, frame.config, best_ray, frame.rays[best_ray].depth);
    int conflicts = 0;
    for (int r = 0; r < static_cast<int>(frame.rays.size()); ++r) {
        const RayHit& ray = frame.rays[r];
        if (!ray.label || *ray.label != target) continue;
        if (ray_endpoint_cell(agent, frame.config, r, ray.depth) != chosen) ++conflicts;
    }
    est.relative = chosen - agent.cell;
    est.confidence = 1.0 / (1.0 + conflicts);
    return est;
}

} // namespace lav
