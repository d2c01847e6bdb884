#pragma once

// Depth-first-search navigation toward the current target estimate.
// The navigator only knows what perception told it: obstacle rays and
// failed moves build up a blocked set, visited cells and the backtrack
// stack make the search systematic. One low-level action per call.

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_set>
#include <vector>

#include "lav/actions.hpp"
#include "lav/geometry.hpp"
#include "lav/vision.hpp"

namespace lav {

inline bool in_interaction_range(const TargetEstimate& estimate) {
    if (!estimate.present()) return false;
    return std::max(std::abs(estimate.relative->x), std::abs(estimate.relative->y)) <= 1;
}

struct NavState {
    std::vector<Cell> path_stack; // top is the agent's current cell
    std::unordered_set<Cell, CellHash> visited;
    std::unordered_set<Cell, CellHash> blocked; // learned from rays and failed moves
    TargetEstimate current_target;
    bool sweeping = false;  // estimate absent, running a systematic sweep
    int scan_rotations = 0; // in-place look-around progress
    int exhaustions = 0;    // times the stack drained this leg
    bool initialized = false;
};

enum class NavStatus { Action, Stuck };

struct NavDecision {
    NavStatus status = NavStatus::Action;
    Action action;
};

namespace detail {

// Neighbor cells in the fixed tie order: ahead, left, right, behind.
inline std::array<Cell, 4> neighbor_preference(const AgentState& agent) {
    Heading h = agent.heading;
    return {agent.cell + heading_delta(h), agent.cell + heading_delta(rotate_left(h)),
            agent.cell + heading_delta(rotate_right(h)),
            agent.cell + heading_delta(rotate_right(rotate_right(h)))};
}

inline Action action_toward(const AgentState& agent, Cell dest) {
    for (int i = 0; i < 4; ++i) {
        Heading h = static_cast<Heading>(i);
        if (agent.cell + heading_delta(h) == dest) {
            int turns = turns_between(agent.heading, h);
            if (turns == 0) return move_ahead();
            return turns == -1 ? rotate_left_action() : rotate_right_action();
        }
    }
    return move_ahead(); // dest not adjacent; caller bug
}

} // namespace detail

// Picks one action. The estimate in `nav.current_target` is refreshed by
// the caller every step; an absent estimate first triggers a look-around
// scan, then a fixed-order sweep of unvisited cells.
inline NavDecision navigate_step(NavState& nav, const PerceptionFrame& frame,
                                 const AgentState& agent) {
    if (!nav.initialized) {
        nav.path_stack.push_back(agent.cell);
        nav.visited.insert(agent.cell);
        nav.initialized = true;
    }

    // Obstacle rays describe cells at distance 1.
    for (int r = 0; r < static_cast<int>(frame.rays.size()); ++r) {
        if (!frame.rays[r].obstacle) continue;
        nav.blocked.insert(ray_endpoint_cell(agent, frame.config, r, 1));
    }

    std::optional<Cell> target;
    if (nav.current_target.present()) {
        target = agent.cell + *nav.current_target.relative;
        nav.sweeping = false;
    } else if (!nav.sweeping) {
        // One look-around per leg; afterwards an absent estimate sweeps.
        if (nav.scan_rotations < 3) {
            ++nav.scan_rotations;
            return {NavStatus::Action, rotate_right_action()};
        }
        nav.sweeping = true;
    }

    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Cell> candidates;
        for (Cell n : detail::neighbor_preference(agent))
            if (!nav.visited.count(n) && !nav.blocked.count(n)) candidates.push_back(n);
        if (target)
            std::stable_sort(candidates.begin(), candidates.end(), [&](Cell a, Cell b) {
                return manhattan(a, *target) < manhattan(b, *target);
            });

        if (!candidates.empty())
            return {NavStatus::Action, detail::action_toward(agent, candidates.front())};

        if (nav.path_stack.size() >= 2) {
            Cell back = nav.path_stack[nav.path_stack.size() - 2];
            return {NavStatus::Action, detail::action_toward(agent, back)};
        }

        // Stack drained. With a live estimate a second drain means the world
        // as learned offers nothing more; otherwise restart the sweep.
        ++nav.exhaustions;
        if (nav.current_target.present() && nav.exhaustions >= 2)
            return {NavStatus::Stuck, {}};
        nav.visited.clear();
        nav.visited.insert(agent.cell);
        nav.path_stack.assign(1, agent.cell);
        nav.blocked.clear();
    }
    return {NavStatus::Stuck, {}};
}

// Feed back the result of the emitted action so the stack and blocked set
// track reality.
inline void navigate_feedback(NavState& nav, const Action& action, ActionResult result,
                              const AgentState& agent_before,
                              const AgentState& agent_after) {
    if (action.kind != ActionKind::MoveAhead) return;
    if (succeeded(result)) {
        Cell arrived = agent_after.cell;
        if (nav.path_stack.size() >= 2 &&
            nav.path_stack[nav.path_stack.size() - 2] == arrived) {
            nav.path_stack.pop_back();
        } else {
            nav.path_stack.push_back(arrived);
        }
        nav.visited.insert(arrived);
    } else {
        nav.blocked.insert(agent_before.cell + heading_delta(agent_before.heading));
    }
}

} // namespace lav
