#pragma once

// Expert reference agent: full scene knowledge, breadth-first shortest
// action paths (rotations cost one step like moves), correct macros.
// Supplies the reference path length for path-weighted metrics and the
// upper-bound navigator.

#include <array>
#include <deque>
#include <optional>
#include <vector>

#include "lav/macros.hpp"
#include "lav/plan.hpp"
#include "lav/scene.hpp"
#include "lav/task.hpp"
#include "lav/worldsim.hpp"

namespace lav {

namespace detail {

// BFS over (cell, heading) poses; move and rotate both cost 1.
inline std::optional<std::vector<Action>> shortest_action_path(
    const Scene& scene, const AgentState& start, const std::vector<Cell>& goal_cells) {
    if (goal_cells.empty()) return std::nullopt;
    for (Cell g : goal_cells)
        if (g == start.cell) return std::vector<Action>{};

    const int pose_count = scene.width * scene.height * 4;
    auto pose_index = [&](Cell c, Heading h) {
        return (c.y * scene.width + c.x) * 4 + static_cast<int>(h);
    };
    std::vector<std::uint8_t> goal_cell_flag(
        static_cast<std::size_t>(scene.width) * scene.height, 0);
    for (Cell g : goal_cells)
        if (scene.in_bounds(g))
            goal_cell_flag[static_cast<std::size_t>(g.y) * scene.width + g.x] = 1;

    std::vector<int> parent(static_cast<std::size_t>(pose_count), -1);
    std::vector<Action> parent_action(static_cast<std::size_t>(pose_count));
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(pose_count), 0);
    std::deque<std::pair<Cell, Heading>> queue;

    seen[static_cast<std::size_t>(pose_index(start.cell, start.heading))] = 1;
    queue.emplace_back(start.cell, start.heading);

    while (!queue.empty()) {
        auto [cell, heading] = queue.front();
        queue.pop_front();
        int from = pose_index(cell, heading);

        std::array<std::pair<Action, std::pair<Cell, Heading>>, 3> moves = {
            std::make_pair(rotate_left_action(), std::make_pair(cell, rotate_left(heading))),
            std::make_pair(rotate_right_action(),
                           std::make_pair(cell, rotate_right(heading))),
            std::make_pair(move_ahead(), std::make_pair(cell + heading_delta(heading), heading)),
        };
        for (const auto& [action, next] : moves) {
            auto [ncell, nheading] = next;
            if (action.kind == ActionKind::MoveAhead && !scene.is_free_floor(ncell)) continue;
            int idx = pose_index(ncell, nheading);
            if (seen[static_cast<std::size_t>(idx)]) continue;
            seen[static_cast<std::size_t>(idx)] = 1;
            parent[static_cast<std::size_t>(idx)] = from;
            parent_action[static_cast<std::size_t>(idx)] = action;
            if (action.kind == ActionKind::MoveAhead &&
                goal_cell_flag[static_cast<std::size_t>(ncell.y) * scene.width + ncell.x]) {
                std::vector<Action> path;
                for (int at = idx; parent[static_cast<std::size_t>(at)] >= 0;
                     at = parent[static_cast<std::size_t>(at)])
                    path.push_back(parent_action[static_cast<std::size_t>(at)]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.emplace_back(ncell, nheading);
        }
    }
    return std::nullopt;
}

} // namespace detail

// Free floor cells from which `target` is within interaction range.
inline std::vector<Cell> interaction_cells(const Scene& scene, Cell target) {
    std::vector<Cell> cells;
    for (int dy = -kInteractionRange; dy <= kInteractionRange; ++dy)
        for (int dx = -kInteractionRange; dx <= kInteractionRange; ++dx) {
            Cell c = target + Cell{dx, dy};
            if (scene.is_free_floor(c) || c == scene.agent.cell) cells.push_back(c);
        }
    return cells;
}

struct ExpertRun {
    bool success = false;
    int steps = 0;
    Scene final_scene;
    std::vector<std::pair<Action, ActionResult>> actions;
};

// Executes the plan with ground-truth navigation and macros, stopping as
// soon as every goal condition holds. Used for achievability checks, the
// reference length, and the expert navigator baseline.
inline ExpertRun run_expert(const Scene& start, const Plan& plan, const TaskSpec& task,
                            int max_steps = 100000) {
    ExpertRun run;
    Scene scene = start;

    auto apply = [&](const Action& action) -> bool {
        auto [next, result] = step(scene, action);
        scene = std::move(next);
        run.actions.emplace_back(action, result);
        ++run.steps;
        if (!succeeded(result)) return false;
        return true;
    };

    auto done = [&] { return count_satisfied_conditions(scene, task) ==
                             static_cast<int>(task.goal_conditions.size()); };

    for (const PlanStep& plan_step : plan.steps) {
        if (run.steps > max_steps) break;
        const ObjectInstance* target = scene.find_object_of_type(plan_step.object);
        if (!target || !target->cell) {
            run.final_scene = scene;
            return run;
        }
        // apply() replaces the scene, so take what we need by value.
        int target_id = target->id;
        Cell target_cell = *target->cell;

        if (chebyshev(scene.agent.cell, target_cell) > kInteractionRange) {
            auto path = detail::shortest_action_path(scene, scene.agent,
                                                     interaction_cells(scene, target_cell));
            if (!path) {
                run.final_scene = scene;
                return run;
            }
            for (const Action& a : *path) {
                if (!apply(a)) {
                    run.final_scene = scene;
                    return run;
                }
                if (done()) {
                    run.success = true;
                    run.final_scene = scene;
                    return run;
                }
            }
        }

        int held = scene.agent.inventory.value_or(-1);
        std::vector<Action> macro;
        try {
            macro = execute_macro(plan_step.subtask, target_id, held);
        } catch (const MissingHeldObject&) {
            run.final_scene = scene;
            return run;
        }
        for (const Action& a : macro) {
            if (!apply(a)) {
                run.final_scene = scene;
                return run;
            }
            if (done()) {
                run.success = true;
                run.final_scene = scene;
                return run;
            }
        }
    }

    run.success = done();
    run.final_scene = scene;
    return run;
}

} // namespace lav
