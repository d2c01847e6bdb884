#pragma once

// Episode runner: generate the bundle, pick a plan (parsed or oracle),
// then loop perceive -> locate -> navigate/macro per plan step until the
// goals hold or a cap fires. Everything lands in the trace.

#include <string>
#include <vector>

#include "lav/config.hpp"
#include "lav/expert.hpp"
#include "lav/lang.hpp"
#include "lav/macros.hpp"
#include "lav/nav.hpp"
#include "lav/taskgen.hpp"
#include "lav/trace.hpp"
#include "lav/vision.hpp"
#include "lav/worldsim.hpp"

namespace lav {

namespace detail {

// Interaction targets are resolved by type against what is actually in
// range; a bad estimate yields no id and the action fails.
inline int resolve_interaction_target(const Scene& scene, ObjectType type) {
    int best = -1;
    for (const auto& obj : scene.objects) {
        if (obj.type != type || !obj.cell) continue;
        if (chebyshev(scene.agent.cell, *obj.cell) > kInteractionRange) continue;
        if (best < 0 || obj.id < best) best = obj.id;
    }
    return best;
}

struct EpisodeEngine {
    const HarnessConfig& config;
    const RunOptions& opts;
    const GeneratedTask& bundle;
    EpisodeTrace& trace;
    Scene scene;
    int budget;
    int failures = 0;
    bool finished = false;

    EpisodeEngine(const HarnessConfig& cfg, const RunOptions& o, const GeneratedTask& b,
                  EpisodeTrace& tr)
        : config(cfg), opts(o), bundle(b), trace(tr), scene(b.scene) {
        budget = cfg.budget_factor * (scene.width + scene.height);
    }

    bool goals_met() const {
        return count_satisfied_conditions(scene, bundle.task) ==
               static_cast<int>(bundle.task.goal_conditions.size());
    }

    // Applies one action, records it, and updates the failure count.
    ActionResult apply(const Action& action) {
        auto [next, result] = step(scene, action);
        scene = std::move(next);
        trace.steps.push_back({action, result, scene.agent.cell, scene.agent.heading});
        ++trace.steps_taken;
        if (!succeeded(result) && is_interaction(action.kind)) ++failures;
        if (goals_met()) {
            trace.success = true;
            finished = true;
        }
        return result;
    }

    bool out_of_resources(std::string& reason) const {
        if (trace.steps_taken >= budget) {
            reason = "StepBudget";
            return true;
        }
        if (failures >= config.failure_cap) {
            reason = "FailureCap";
            return true;
        }
        return false;
    }
};

} // namespace detail

// Runs one seeded episode under the given module fidelities. All failures
// become Failure outcomes in the trace; nothing escapes.
inline EpisodeTrace run_episode(std::uint64_t seed, const HarnessConfig& config,
                                const RunOptions& opts,
                                const Lexicon& lexicon = default_lexicon()) {
    GeneratedTask bundle = generate_bundle(seed, config.gen, lexicon);

    EpisodeTrace trace;
    trace.seed = seed;
    trace.config_fingerprint = config_fingerprint(config, opts);
    trace.level = std::string(paraphrase_level_name(config.gen.paraphrase_level));
    trace.instruction = bundle.instruction.text;
    trace.lstar = bundle.task.expert_path_length;
    trace.goals_total = static_cast<int>(bundle.task.goal_conditions.size());

    detail::EpisodeEngine engine(config, opts, bundle, trace);

    NoiseConfig noise = opts.oracle_vision ? NoiseConfig{} : config.noise;
    Rng noise_rng(derive_seed(seed ^ config.noise.seed, "noise"));
    ObservedTypeMask observed = 0;

    auto finish = [&](const std::string& reason) {
        trace.goals_satisfied = count_satisfied_conditions(engine.scene, bundle.task);
        trace.success = trace.goals_satisfied == trace.goals_total;
        trace.failure_reason = trace.success ? "-" : reason;
        return trace;
    };

    // Initial perception informs plan selection.
    Observation obs = render_observation(engine.scene, config.obs);
    PerceptionFrame frame = perceive(obs, noise, noise_rng, observed);

    Plan plan;
    if (opts.oracle_language) {
        plan = bundle.ground_truth_plan;
    } else {
        ParseResult parsed = parse_instruction(bundle.instruction.text, lexicon);
        if (!parsed.ok())
            return finish(parsed.error == ParseError::NoParse ? "NoParse" : "UnknownObject");
        std::vector<Plan> candidates;
        for (const Plan& c : parsed.candidates) candidates.push_back(normalize_plan(c));
        std::vector<Plan> visible;
        for (const Plan& c : candidates) {
            bool all_seen = true;
            for (const PlanStep& s : c.steps)
                if (!mask_contains(frame.observed_types, s.object)) all_seen = false;
            if (all_seen) visible.push_back(c);
        }
        if (visible.empty()) visible = candidates;
        double unobserved_cost = 2.0 * (engine.scene.width + engine.scene.height);
        plan = rank_plans_by_value(visible, frame, engine.scene.agent, unobserved_cost);
    }
    plan = normalize_plan(plan);
    trace.plan = plan;

    std::string reason;
    std::size_t step_index = 0;
    NavState nav;
    std::vector<Action> expert_path; // queued actions for the expert navigator
    std::size_t expert_path_pos = 0;

    while (!engine.finished && step_index < plan.steps.size()) {
        if (engine.out_of_resources(reason)) return finish(reason);

        const PlanStep& plan_step = plan.steps[step_index];
        bool in_range = false;

        if (opts.nav == NavKind::Expert) {
            const ObjectInstance* target = engine.scene.find_object_of_type(plan_step.object);
            if (!target || !target->cell) {
                // Nothing of this type exists; skip the unexecutable step.
                ++engine.failures;
                ++step_index;
                continue;
            }
            in_range = chebyshev(engine.scene.agent.cell, *target->cell) <= kInteractionRange;
            if (!in_range) {
                if (expert_path_pos >= expert_path.size()) {
                    auto path = detail::shortest_action_path(
                        engine.scene, engine.scene.agent,
                        interaction_cells(engine.scene, *target->cell));
                    if (!path) return finish("Stuck");
                    expert_path = *path;
                    expert_path_pos = 0;
                }
                engine.apply(expert_path[expert_path_pos++]);
                continue;
            }
            expert_path.clear();
            expert_path_pos = 0;
        } else {
            obs = render_observation(engine.scene, config.obs);
            frame = perceive(obs, noise, noise_rng, observed);
            TargetEstimate estimate =
                locate_target(frame, plan_step.object, engine.scene.agent);
            nav.current_target = estimate;
            in_range = in_interaction_range(estimate);
            if (!in_range) {
                NavDecision decision = navigate_step(nav, frame, engine.scene.agent);
                if (decision.status == NavStatus::Stuck) return finish("Stuck");
                AgentState before = engine.scene.agent;
                ActionResult result = engine.apply(decision.action);
                navigate_feedback(nav, decision.action, result, before, engine.scene.agent);
                continue;
            }
        }

        // In range: run the subtask macro, aborting on the first failure.
        int target_id = detail::resolve_interaction_target(engine.scene, plan_step.object);
        int held_id = engine.scene.agent.inventory.value_or(-1);
        std::vector<Action> macro;
        try {
            macro = execute_macro(plan_step.subtask, target_id, held_id);
        } catch (const MissingHeldObject&) {
            ++engine.failures;
            ++step_index; // unexecutable without a held object; move on
            nav = NavState{};
            continue;
        }
        bool macro_ok = true;
        for (const Action& action : macro) {
            if (engine.finished) break;
            if (engine.out_of_resources(reason)) return finish(reason);
            if (!succeeded(engine.apply(action))) {
                macro_ok = false;
                break;
            }
        }
        if (macro_ok || engine.finished) {
            ++step_index;
            nav = NavState{};
            expert_path.clear();
            expert_path_pos = 0;
        }
    }

    return finish("GoalsUnmet");
}

// Re-simulates a trace's recorded actions from the seed's initial scene.
// Returns true when every recorded result, the outcome, and the goal
// fraction match.
inline bool replay_trace(const EpisodeTrace& trace, const HarnessConfig& config,
                         const Lexicon& lexicon = default_lexicon()) {
    GeneratedTask bundle = generate_bundle(trace.seed, config.gen, lexicon);
    Scene scene = bundle.scene;
    for (const StepRecord& rec : trace.steps) {
        auto [next, result] = step(scene, rec.action);
        scene = std::move(next);
        if (result != rec.result) return false;
        if (!(scene.agent.cell == rec.agent_cell) || scene.agent.heading != rec.agent_heading)
            return false;
    }
    int satisfied = count_satisfied_conditions(scene, bundle.task);
    int total = static_cast<int>(bundle.task.goal_conditions.size());
    if (satisfied != trace.goals_satisfied || total != trace.goals_total) return false;
    bool success = satisfied == total;
    return success == trace.success;
}

} // namespace lav
