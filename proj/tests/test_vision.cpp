#include <catch2/catch.hpp>

#include <cmath>

#include "lav/nav.hpp"
#include "lav/taskgen.hpp"
#include "lav/vision.hpp"

using namespace lav;

namespace {

// Independent ray marcher reimplementing the sampling geometry, used as
// the brute-force oracle for visibility and localization.
struct OracleHit {
    int ray;
    Cell cell;
    int depth;
    ObjectType type;
};

std::vector<OracleHit> oracle_ray_hits(const Scene& scene, const ObsConfig& cfg) {
    std::vector<OracleHit> hits;
    double fov = cfg.fov_deg * M_PI / 180.0;
    double base = 0.0;
    switch (scene.agent.heading) {
        case Heading::North: base = 0.0; break;
        case Heading::East: base = M_PI / 2.0; break;
        case Heading::South: base = M_PI; break;
        case Heading::West: base = 3.0 * M_PI / 2.0; break;
    }
    for (int r = 0; r < cfg.rays; ++r) {
        double phi = cfg.rays > 1 ? base - fov / 2.0 + fov * r / (cfg.rays - 1) : base;
        // Heading North is -y; positive phi rotates toward +x (east).
        double dx = std::sin(phi);
        double dy = -std::cos(phi);
        for (int k = 1; k <= cfg.max_depth; ++k) {
            double px = scene.agent.cell.x + 0.5 + dx * k;
            double py = scene.agent.cell.y + 0.5 + dy * k;
            Cell c{static_cast<int>(std::floor(px)), static_cast<int>(std::floor(py))};
            if (c == scene.agent.cell) continue;
            if (!scene.in_bounds(c) || scene.is_wall(c)) break;
            int occ = scene.occupant_id(c);
            if (occ >= 0) {
                hits.push_back({r, c, k, scene.find_object(occ)->type});
                break;
            }
        }
    }
    return hits;
}

// Expected estimate for `target`: among oracle hits of that type, minimal
// depth, ties toward the central then leftmost ray.
std::optional<Cell> oracle_relative(const Scene& scene, const ObsConfig& cfg,
                                    ObjectType target) {
    std::vector<OracleHit> hits = oracle_ray_hits(scene, cfg);
    int center = (cfg.rays - 1) / 2;
    const OracleHit* best = nullptr;
    for (const OracleHit& h : hits) {
        if (h.type != target) continue;
        if (!best || h.depth < best->depth ||
            (h.depth == best->depth && std::abs(h.ray - center) < std::abs(best->ray - center)))
            best = &h;
    }
    if (!best) return std::nullopt;
    return best->cell - scene.agent.cell;
}

} // namespace

TEST_CASE("zero noise is the identity channel") {
    GenConfig gen;
    Scene scene = generate_scene(5, gen);
    Observation obs = render_observation(scene);
    Rng rng(123);
    ObservedTypeMask observed = 0;
    PerceptionFrame frame = perceive(obs, NoiseConfig{}, rng, observed);
    REQUIRE(frame.rays.size() == obs.rays.size());
    for (std::size_t i = 0; i < frame.rays.size(); ++i) CHECK(frame.rays[i] == obs.rays[i]);
}

TEST_CASE("miss probability one blanks every label") {
    GenConfig gen;
    Scene scene = generate_scene(6, gen);
    Observation obs = render_observation(scene);
    NoiseConfig noise;
    noise.miss_prob = 1.0;
    Rng rng(7);
    ObservedTypeMask observed = 0;
    PerceptionFrame frame = perceive(obs, noise, rng, observed);
    for (const RayHit& ray : frame.rays) CHECK_FALSE(ray.label.has_value());
    CHECK(observed == 0);
}

TEST_CASE("mislabel rate calibrates to the configured probability") {
    // One labeled ray observed 10^4 times; binomial tolerance +/- 0.02.
    Observation obs;
    obs.config = ObsConfig{};
    obs.rays.assign(static_cast<std::size_t>(obs.config.rays),
                    RayHit{5, ObjectType::Bowl, false});
    NoiseConfig noise;
    noise.mislabel_prob = 0.2;
    Rng rng(99);
    ObservedTypeMask observed = 0;

    int total = 0, mislabeled = 0;
    while (total < 10000) {
        PerceptionFrame frame = perceive(obs, noise, rng, observed);
        for (const RayHit& ray : frame.rays) {
            ++total;
            REQUIRE(ray.label.has_value());
            if (*ray.label != ObjectType::Bowl) ++mislabeled;
        }
    }
    double rate = static_cast<double>(mislabeled) / static_cast<double>(total);
    CHECK(rate == Approx(0.2).margin(0.02));
}

TEST_CASE("miss rate calibrates to the configured probability") {
    Observation obs;
    obs.config = ObsConfig{};
    obs.rays.assign(static_cast<std::size_t>(obs.config.rays),
                    RayHit{5, ObjectType::Bowl, false});
    NoiseConfig noise;
    noise.miss_prob = 0.1;
    Rng rng(1234);
    ObservedTypeMask observed = 0;
    int total = 0, missed = 0;
    while (total < 10000) {
        PerceptionFrame frame = perceive(obs, noise, rng, observed);
        for (const RayHit& ray : frame.rays) {
            ++total;
            if (!ray.label) ++missed;
        }
    }
    double rate = static_cast<double>(missed) / static_cast<double>(total);
    CHECK(rate == Approx(0.1).margin(0.02));
}

TEST_CASE("depth jitter stays clamped and flips the obstacle flag consistently") {
    Observation obs;
    obs.config = ObsConfig{};
    obs.rays.assign(static_cast<std::size_t>(obs.config.rays),
                    RayHit{2, ObjectType::Bowl, false});
    NoiseConfig noise;
    noise.depth_sigma = 1.5;
    Rng rng(5);
    ObservedTypeMask observed = 0;
    for (int i = 0; i < 200; ++i) {
        PerceptionFrame frame = perceive(obs, noise, rng, observed);
        for (const RayHit& ray : frame.rays) {
            CHECK(ray.depth >= 1);
            CHECK(ray.depth <= obs.config.max_depth);
            CHECK(ray.obstacle == (ray.depth == 1));
        }
    }
}

TEST_CASE("perceive is deterministic given the same stream") {
    GenConfig gen;
    Scene scene = generate_scene(9, gen);
    Observation obs = render_observation(scene);
    NoiseConfig noise{0.2, 0.2, 1.0, 0};
    Rng rng_a(42), rng_b(42);
    ObservedTypeMask ma = 0, mb = 0;
    PerceptionFrame a = perceive(obs, noise, rng_a, ma);
    PerceptionFrame b = perceive(obs, noise, rng_b, mb);
    CHECK(a.rays == b.rays);
    CHECK(ma == mb);
}

TEST_CASE("target three cells ahead reports relative (0,-3)") {
    Scene scene(9, 9);
    scene.add_object(ObjectType::Bowl, {4, 2});
    scene.agent.cell = {4, 5};
    scene.agent.heading = Heading::North;
    Observation obs = render_observation(scene);
    Rng rng(1);
    ObservedTypeMask observed = 0;
    PerceptionFrame frame = perceive(obs, NoiseConfig{}, rng, observed);
    TargetEstimate est = locate_target(frame, ObjectType::Bowl, scene.agent);
    REQUIRE(est.present());
    CHECK(*est.relative == Cell{0, -3});
    CHECK(est.confidence > 0.0);
}

TEST_CASE("absent targets yield an absent estimate") {
    Scene scene(9, 9);
    scene.agent.cell = {4, 4};
    Observation obs = render_observation(scene);
    Rng rng(1);
    ObservedTypeMask observed = 0;
    PerceptionFrame frame = perceive(obs, NoiseConfig{}, rng, observed);
    TargetEstimate est = locate_target(frame, ObjectType::Bowl, scene.agent);
    CHECK_FALSE(est.present());
    CHECK_FALSE(in_interaction_range(est));
}

TEST_CASE("oracle localization matches the brute-force ray oracle") {
    GenConfig gen;
    gen.obstacle_density = 0.2;
    ObsConfig cfg;
    int located = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        Scene scene = generate_scene(seed, gen);
        Observation obs = render_observation(scene, cfg);
        Rng rng(seed);
        ObservedTypeMask observed = 0;
        PerceptionFrame frame = perceive(obs, NoiseConfig{}, rng, observed);
        for (ObjectType type : all_object_types()) {
            auto expected = oracle_relative(scene, cfg, type);
            TargetEstimate est = locate_target(frame, type, scene.agent);
            if (expected.has_value()) {
                ++located;
                REQUIRE(est.present());
                CHECK(*est.relative == *expected);
                CHECK(std::max(std::abs(est.relative->x), std::abs(est.relative->y)) <=
                      cfg.max_depth);
            } else {
                CHECK_FALSE(est.present());
            }
        }
    }
    CHECK(located > 100); // the property actually exercised visible targets
}
