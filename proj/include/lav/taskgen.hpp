#pragma once

// Procedural scenes, tasks, and templated instructions. Every operation
// is a pure function of (seed, inputs); generation retries with fresh
// sub-seeds and reports GenerationError only when a config cannot be
// satisfied. Emitted tasks are verified achievable by running the expert,
// which also fills in the reference path length.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/expert.hpp"
#include "lav/lexicon.hpp"
#include "lav/plan.hpp"
#include "lav/rng.hpp"
#include "lav/scene.hpp"
#include "lav/task.hpp"

namespace lav {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The expert agent could not finish a task it was handed; during
// generation this signals a retry, elsewhere a bug.
struct ExpertFailed : GenerationError {
    using GenerationError::GenerationError;
};

enum class ParaphraseLevel : std::uint8_t { Canonical, Synonym, Distractor };

inline std::string_view paraphrase_level_name(ParaphraseLevel level) {
    switch (level) {
        case ParaphraseLevel::Canonical: return "canonical";
        case ParaphraseLevel::Synonym: return "synonym";
        case ParaphraseLevel::Distractor: return "distractor";
    }
    return "?";
}

inline std::optional<ParaphraseLevel> paraphrase_level_from_name(std::string_view s) {
    if (s == "canonical") return ParaphraseLevel::Canonical;
    if (s == "synonym") return ParaphraseLevel::Synonym;
    if (s == "distractor") return ParaphraseLevel::Distractor;
    return std::nullopt;
}

struct GenConfig {
    int grid_min = 9;
    int grid_max = 12;
    int object_min = 3; // pickupable items; furniture is always present
    int object_max = 5;
    double obstacle_density = 0.12;
    ParaphraseLevel paraphrase_level = ParaphraseLevel::Distractor;
    // Indexed by Subtask. PickUp and Place jointly weight the pick&place
    // shape; the appliance subtasks weight their own shape.
    std::array<double, kSubtaskCount> subtask_weights = {1, 1, 1, 1, 1, 1, 1};

    friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

struct Instruction {
    std::string text;
    Plan source_plan; // ground truth, for evaluation only
    std::uint64_t seed = 0;
};

enum class TaskShape : std::uint8_t {
    PickPlace,
    CleanPlace,
    HeatPlace,
    CoolPlace,
    SlicePlace,
    Toggle,
};

inline std::string_view task_shape_name(TaskShape s) {
    switch (s) {
        case TaskShape::PickPlace: return "pick_place";
        case TaskShape::CleanPlace: return "clean_place";
        case TaskShape::HeatPlace: return "heat_place";
        case TaskShape::CoolPlace: return "cool_place";
        case TaskShape::SlicePlace: return "slice_place";
        case TaskShape::Toggle: return "toggle";
    }
    return "?";
}

struct GeneratedTask {
    std::uint64_t seed = 0;
    Scene scene;
    TaskSpec task;
    Plan ground_truth_plan;
    TaskShape shape = TaskShape::Toggle;
    ObjectType target = ObjectType::Lamp;
    ObjectType destination = ObjectType::Cabinet; // unused for Toggle
    Instruction instruction;
};

namespace detail {

inline constexpr std::array<ObjectType, 6> kFurniture = {
    ObjectType::Sink,    ObjectType::Microwave, ObjectType::Fridge,
    ObjectType::Cabinet, ObjectType::Table,     ObjectType::Lamp};

inline constexpr std::array<ObjectType, 5> kPickupables = {
    ObjectType::Bowl, ObjectType::Cup, ObjectType::Apple, ObjectType::Potato,
    ObjectType::Knife};

// All free floor cells form one connected region (4-connectivity).
inline bool floor_connected(const Scene& scene) {
    Cell start{-1, -1};
    int floor_count = 0;
    for (int y = 0; y < scene.height; ++y)
        for (int x = 0; x < scene.width; ++x)
            if (scene.is_free_floor({x, y})) {
                if (start.x < 0) start = {x, y};
                ++floor_count;
            }
    if (floor_count == 0) return false;

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(scene.width) * scene.height, 0);
    std::vector<Cell> frontier{start};
    seen[static_cast<std::size_t>(start.y) * scene.width + start.x] = 1;
    int reached = 0;
    while (!frontier.empty()) {
        Cell c = frontier.back();
        frontier.pop_back();
        ++reached;
        for (Heading h : {Heading::North, Heading::East, Heading::South, Heading::West}) {
            Cell n = c + heading_delta(h);
            if (!scene.is_free_floor(n)) continue;
            std::size_t idx = static_cast<std::size_t>(n.y) * scene.width + n.x;
            if (seen[idx]) continue;
            seen[idx] = 1;
            frontier.push_back(n);
        }
    }
    return reached == floor_count;
}

// Every object must have a free floor cell within interaction range that
// the agent can reach.
inline bool all_objects_reachable(const Scene& scene) {
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(scene.width) * scene.height, 0);
    std::vector<Cell> frontier{scene.agent.cell};
    reach[static_cast<std::size_t>(scene.agent.cell.y) * scene.width + scene.agent.cell.x] = 1;
    while (!frontier.empty()) {
        Cell c = frontier.back();
        frontier.pop_back();
        for (Heading h : {Heading::North, Heading::East, Heading::South, Heading::West}) {
            Cell n = c + heading_delta(h);
            if (!scene.is_free_floor(n)) continue;
            std::size_t idx = static_cast<std::size_t>(n.y) * scene.width + n.x;
            if (reach[idx]) continue;
            reach[idx] = 1;
            frontier.push_back(n);
        }
    }
    for (const auto& obj : scene.objects) {
        if (!obj.cell) continue;
        bool ok = false;
        for (int dy = -1; dy <= 1 && !ok; ++dy)
            for (int dx = -1; dx <= 1 && !ok; ++dx) {
                Cell n = *obj.cell + Cell{dx, dy};
                if (!scene.in_bounds(n)) continue;
                if (reach[static_cast<std::size_t>(n.y) * scene.width + n.x]) ok = true;
            }
        if (!ok) return false;
    }
    return true;
}

inline std::optional<Scene> try_generate_scene(Rng& rng, const GenConfig& config) {
    int w = rng.uniform_int(config.grid_min, config.grid_max);
    int h = rng.uniform_int(config.grid_min, config.grid_max);
    Scene scene(w, h);
    for (int x = 0; x < w; ++x) {
        scene.set_wall({x, 0}, true);
        scene.set_wall({x, h - 1}, true);
    }
    for (int y = 0; y < h; ++y) {
        scene.set_wall({0, y}, true);
        scene.set_wall({w - 1, y}, true);
    }

    std::vector<Cell> interior;
    for (int y = 1; y < h - 1; ++y)
        for (int x = 1; x < w - 1; ++x) interior.push_back({x, y});

    // Interior walls, skipping any that would disconnect the floor.
    int wall_target =
        static_cast<int>(config.obstacle_density * static_cast<double>(interior.size()) + 0.5);
    std::vector<Cell> shuffled = interior;
    rng.shuffle(shuffled);
    int placed = 0;
    for (Cell c : shuffled) {
        if (placed >= wall_target) break;
        scene.set_wall(c, true);
        if (floor_connected(scene)) {
            ++placed;
        } else {
            scene.set_wall(c, false);
        }
    }

    int pick_count = rng.uniform_int(config.object_min, config.object_max);
    pick_count = std::clamp(pick_count, 1, static_cast<int>(kPickupables.size()));
    std::vector<ObjectType> pickup_pool(kPickupables.begin(), kPickupables.end());
    rng.shuffle(pickup_pool);

    std::vector<ObjectType> to_place(kFurniture.begin(), kFurniture.end());
    to_place.insert(to_place.end(), pickup_pool.begin(), pickup_pool.begin() + pick_count);

    for (ObjectType type : to_place) {
        std::vector<Cell> spots;
        for (Cell c : interior)
            if (scene.is_free_floor(c)) spots.push_back(c);
        rng.shuffle(spots);
        bool done = false;
        for (Cell c : spots) {
            int id = scene.add_object(type, c);
            bool neighbor_free = false;
            for (int dy = -1; dy <= 1 && !neighbor_free; ++dy)
                for (int dx = -1; dx <= 1 && !neighbor_free; ++dx)
                    if (scene.is_free_floor(c + Cell{dx, dy})) neighbor_free = true;
            if (neighbor_free && floor_connected(scene)) {
                done = true;
                break;
            }
            scene.objects.pop_back();
            scene.set_occupant(c, -1);
            (void)id;
        }
        if (!done) return std::nullopt;
    }

    std::vector<Cell> agent_spots;
    for (Cell c : interior)
        if (scene.is_free_floor(c)) agent_spots.push_back(c);
    if (agent_spots.empty()) return std::nullopt;
    scene.agent.cell = agent_spots[rng.pick_index(agent_spots.size())];
    scene.agent.heading = static_cast<Heading>(rng.uniform_int(0, 3));
    scene.agent.inventory.reset();

    if (!all_objects_reachable(scene)) return std::nullopt;
    return scene;
}

} // namespace detail

// Deterministic in (seed, config). The floor is one connected region and
// every object is reachable from the agent spawn.
inline Scene generate_scene(std::uint64_t seed, const GenConfig& config) {
    if (config.grid_min < 5 || config.grid_max < config.grid_min)
        throw GenerationError("grid size range invalid");
    if (config.obstacle_density < 0.0 || config.obstacle_density > 1.0)
        throw GenerationError("obstacle density out of range");
    Rng rng(derive_seed(seed, "scene"));
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto scene = detail::try_generate_scene(rng, config);
        if (scene) {
            scene->rng_seed = seed;
            return *scene;
        }
    }
    throw GenerationError("could not generate a valid scene; config too constrained");
}

namespace detail {

struct ShapeChoice {
    TaskShape shape;
    ObjectType target;
    ObjectType destination;
};

inline std::optional<ShapeChoice> choose_shape(Rng& rng, const Scene& scene,
                                               const GenConfig& config) {
    auto present = [&](ObjectType t) { return scene.find_object_of_type(t) != nullptr; };
    auto pick_present = [&](std::initializer_list<ObjectType> types)
        -> std::optional<ObjectType> {
        std::vector<ObjectType> avail;
        for (ObjectType t : types)
            if (present(t)) avail.push_back(t);
        if (avail.empty()) return std::nullopt;
        return avail[rng.pick_index(avail.size())];
    };

    const auto& w = config.subtask_weights;
    std::vector<TaskShape> shapes;
    std::vector<double> weights;
    auto add = [&](TaskShape s, double weight, bool feasible) {
        if (!feasible || weight <= 0.0) return;
        shapes.push_back(s);
        weights.push_back(weight);
    };
    bool any_pickupable = false;
    for (ObjectType t : kPickupables) any_pickupable = any_pickupable || present(t);
    bool dish = present(ObjectType::Bowl) || present(ObjectType::Cup);
    bool food = present(ObjectType::Apple) || present(ObjectType::Potato);

    add(TaskShape::PickPlace,
        (w[static_cast<int>(Subtask::PickUp)] + w[static_cast<int>(Subtask::Place)]) / 2.0,
        any_pickupable);
    add(TaskShape::CleanPlace, w[static_cast<int>(Subtask::Clean)], dish);
    add(TaskShape::HeatPlace, w[static_cast<int>(Subtask::Heat)], food);
    add(TaskShape::CoolPlace, w[static_cast<int>(Subtask::Cool)], food);
    add(TaskShape::SlicePlace, w[static_cast<int>(Subtask::Slice)],
        present(ObjectType::Knife) && food);
    add(TaskShape::Toggle, w[static_cast<int>(Subtask::Toggle)], present(ObjectType::Lamp));
    if (shapes.empty()) return std::nullopt;

    TaskShape shape = shapes[rng.weighted_index(weights)];
    ShapeChoice choice{shape, ObjectType::Lamp, ObjectType::Cabinet};
    switch (shape) {
        case TaskShape::PickPlace: {
            std::vector<ObjectType> avail;
            for (ObjectType t : kPickupables)
                if (present(t)) avail.push_back(t);
            choice.target = avail[rng.pick_index(avail.size())];
            break;
        }
        case TaskShape::CleanPlace:
            choice.target = *pick_present({ObjectType::Bowl, ObjectType::Cup});
            break;
        case TaskShape::HeatPlace:
        case TaskShape::CoolPlace:
        case TaskShape::SlicePlace:
            choice.target = *pick_present({ObjectType::Apple, ObjectType::Potato});
            break;
        case TaskShape::Toggle: choice.target = ObjectType::Lamp; break;
    }
    if (shape != TaskShape::Toggle)
        choice.destination =
            rng.bernoulli(0.5) ? ObjectType::Cabinet : ObjectType::Table;
    return choice;
}

inline Plan plan_for_shape(const ShapeChoice& c) {
    Plan plan;
    switch (c.shape) {
        case TaskShape::PickPlace:
            plan.steps = {{Subtask::PickUp, c.target}, {Subtask::Place, c.destination}};
            break;
        case TaskShape::CleanPlace:
            plan.steps = {{Subtask::PickUp, c.target},
                          {Subtask::Clean, ObjectType::Sink},
                          {Subtask::Place, c.destination}};
            break;
        case TaskShape::HeatPlace:
            plan.steps = {{Subtask::PickUp, c.target},
                          {Subtask::Heat, ObjectType::Microwave},
                          {Subtask::Place, c.destination}};
            break;
        case TaskShape::CoolPlace:
            plan.steps = {{Subtask::PickUp, c.target},
                          {Subtask::Cool, ObjectType::Fridge},
                          {Subtask::Place, c.destination}};
            break;
        case TaskShape::SlicePlace:
            // The knife is stashed in the sink to free the hand.
            plan.steps = {{Subtask::PickUp, ObjectType::Knife},
                          {Subtask::Slice, c.target},
                          {Subtask::Place, ObjectType::Sink},
                          {Subtask::PickUp, c.target},
                          {Subtask::Place, c.destination}};
            break;
        case TaskShape::Toggle:
            plan.steps = {{Subtask::Toggle, ObjectType::Lamp}};
            break;
    }
    return plan;
}

inline std::vector<GoalCondition> conditions_for_shape(const ShapeChoice& c) {
    switch (c.shape) {
        case TaskShape::PickPlace:
            return {GoalCondition::in_receptacle(c.target, c.destination)};
        case TaskShape::CleanPlace:
            return {GoalCondition::state(c.target, StateField::Dirty, false),
                    GoalCondition::in_receptacle(c.target, c.destination)};
        case TaskShape::HeatPlace:
            return {GoalCondition::temperature(c.target, Temperature::Hot),
                    GoalCondition::in_receptacle(c.target, c.destination)};
        case TaskShape::CoolPlace:
            return {GoalCondition::temperature(c.target, Temperature::Cold),
                    GoalCondition::in_receptacle(c.target, c.destination)};
        case TaskShape::SlicePlace:
            return {GoalCondition::state(c.target, StateField::Sliced, true),
                    GoalCondition::in_receptacle(c.target, c.destination)};
        case TaskShape::Toggle:
            return {GoalCondition::state(ObjectType::Lamp, StateField::Powered, true)};
    }
    return {};
}

} // namespace detail

// Expert reference length for (scene, plan, task). Throws ExpertFailed
// when the expert cannot complete the task.
inline int expert_path_length(const Scene& scene, const Plan& plan, const TaskSpec& task) {
    ExpertRun run = run_expert(scene, plan, task);
    if (!run.success) throw ExpertFailed("expert could not complete the generated task");
    return run.steps;
}

// Emits an achievable task for the scene: goal conditions plus the ground
// truth plan, with expert_path_length filled in.
inline GeneratedTask generate_task(std::uint64_t seed, const Scene& scene,
                                   const GenConfig& config) {
    Rng rng(derive_seed(seed, "task"));
    auto choice = detail::choose_shape(rng, scene, config);
    if (!choice) throw GenerationError("no feasible task shape for scene");

    GeneratedTask gt;
    gt.seed = seed;
    gt.scene = scene;
    gt.shape = choice->shape;
    gt.target = choice->target;
    gt.destination = choice->destination;
    gt.ground_truth_plan = detail::plan_for_shape(*choice);
    gt.task.goal_conditions = detail::conditions_for_shape(*choice);
    gt.task.expert_path_length = expert_path_length(scene, gt.ground_truth_plan, gt.task);
    return gt;
}

namespace detail {

inline std::string surface_noun(const Lexicon& lexicon, ObjectType t, Rng& rng,
                                bool use_synonyms) {
    if (!use_synonyms) return lexicon.noun_for(t);
    std::vector<std::string> options = lexicon.synonyms_for(t);
    if (options.empty()) return lexicon.noun_for(t);
    return options[rng.pick_index(options.size())];
}

inline std::string surface_word(const std::string& canonical, Rng& rng, bool use_synonyms) {
    static const std::vector<std::pair<std::string, std::string>> alternatives = {
        {"put", "place"}, {"clean", "washed"}, {"heat", "warm"}, {"cool", "chill"},
        {"slice", "cut"}, {"turn", "switch"},  {"in", "into"},   {"on", "onto"},
    };
    if (!use_synonyms) return canonical;
    for (const auto& [word, alt] : alternatives)
        if (word == canonical && rng.bernoulli(0.5)) return alt;
    return canonical;
}

} // namespace detail

// Renders the ground-truth plan through the template grammar. Canonical
// text is fixed per (shape, objects); synonym level swaps surface forms
// from the lexicon; distractor additionally inserts irrelevant words and
// clauses that the parser may or may not survive.
inline Instruction generate_instruction(const GeneratedTask& gt, std::uint64_t seed,
                                        const GenConfig& config,
                                        const Lexicon& lexicon = default_lexicon()) {
    Rng rng(derive_seed(seed, "instruction"));
    bool syn = config.paraphrase_level != ParaphraseLevel::Canonical;

    std::string prep_base = gt.destination == ObjectType::Table ? "on" : "in";
    auto noun = [&](ObjectType t) { return detail::surface_noun(lexicon, t, rng, syn); };
    auto word = [&](const std::string& w) { return detail::surface_word(w, rng, syn); };

    std::vector<std::string> tokens;
    switch (gt.shape) {
        case TaskShape::PickPlace:
            tokens = {word("put"), "the", noun(gt.target), word(prep_base), "the",
                      noun(gt.destination)};
            break;
        case TaskShape::CleanPlace:
            tokens = {word("put"),      "a",  word("clean"), noun(gt.target),
                      word(prep_base), "the", noun(gt.destination)};
            break;
        case TaskShape::HeatPlace:
            tokens = {word("heat"), "the", noun(gt.target), "and", word("put"), "it",
                      word(prep_base), "the", noun(gt.destination)};
            break;
        case TaskShape::CoolPlace:
            tokens = {word("cool"), "the", noun(gt.target), "and", word("put"), "it",
                      word(prep_base), "the", noun(gt.destination)};
            break;
        case TaskShape::SlicePlace:
            tokens = {word("slice"), "the", noun(gt.target), "and", word("put"), "it",
                      word(prep_base), "the", noun(gt.destination)};
            break;
        case TaskShape::Toggle:
            tokens = {word("turn"), "on", "the", noun(ObjectType::Lamp)};
            break;
    }

    if (config.paraphrase_level == ParaphraseLevel::Distractor) {
        static const std::vector<std::string> adverbs = {"carefully", "quickly", "quietly"};
        static const std::vector<std::string> clauses = {
            "and watch out for the cat", "and mind the rug", "before the guests arrive"};
        static const std::vector<std::string> prefixes = {"please", "now"};
        // The adverb lands right after the verb, which breaks the rule window.
        if (rng.bernoulli(0.25))
            tokens.insert(tokens.begin() + 1, adverbs[rng.pick_index(adverbs.size())]);
        if (rng.bernoulli(0.3))
            tokens.insert(tokens.begin(), prefixes[rng.pick_index(prefixes.size())]);
        if (rng.bernoulli(0.5)) tokens.push_back(clauses[rng.pick_index(clauses.size())]);
    }

    Instruction instr;
    instr.seed = seed;
    instr.source_plan = gt.ground_truth_plan;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) instr.text += " ";
        instr.text += tokens[i];
    }
    return instr;
}

// Full pipeline for one seed: scene, task, instruction. A scene that offers
// no feasible shape for the configured mix (or defeats the expert) is
// regenerated from a derived seed, a bounded number of times.
inline GeneratedTask generate_bundle(std::uint64_t seed, const GenConfig& config,
                                     const Lexicon& lexicon = default_lexicon()) {
    std::uint64_t scene_seed = seed;
    for (int attempt = 0;; ++attempt) {
        Scene scene = generate_scene(scene_seed, config);
        try {
            GeneratedTask gt = generate_task(seed, scene, config);
            gt.instruction = generate_instruction(gt, seed, config, lexicon);
            return gt;
        } catch (const GenerationError&) {
            if (attempt >= 8) throw;
            scene_seed = derive_seed(scene_seed, "regen");
        }
    }
}

} // namespace lav
