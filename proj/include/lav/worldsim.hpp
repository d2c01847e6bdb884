#pragma once

// Low-level action transition function. Deterministic: a failed action
// leaves the returned scene equal to the input scene.

#include <utility>

#include "lav/actions.hpp"
#include "lav/scene.hpp"

namespace lav {

inline constexpr int kInteractionRange = 1; // Chebyshev cells

inline bool within_interaction_range(const AgentState& agent, Cell target) {
    return chebyshev(agent.cell, target) <= kInteractionRange;
}

namespace detail {

// Turning an appliance on transforms its contents.
inline void apply_appliance_transform(Scene& scene, ObjectInstance& appliance) {
    for (int id : appliance.contents) {
        ObjectInstance* obj = scene.find_object(id);
        if (!obj) continue;
        switch (appliance.type) {
            case ObjectType::Sink: obj->states.dirty = false; break;
            case ObjectType::Microwave: obj->states.temperature = Temperature::Hot; break;
            case ObjectType::Fridge: obj->states.temperature = Temperature::Cold; break;
            default: break;
        }
    }
}

inline ActionResult apply_action(Scene& scene, const Action& action) {
    AgentState& agent = scene.agent;
    switch (action.kind) {
        case ActionKind::MoveAhead: {
            Cell dest = agent.cell + heading_delta(agent.heading);
            if (!scene.in_bounds(dest) || scene.is_blocked(dest)) return ActionResult::Blocked;
            agent.cell = dest;
            return ActionResult::Ok;
        }
        case ActionKind::RotateLeft:
            agent.heading = rotate_left(agent.heading);
            return ActionResult::Ok;
        case ActionKind::RotateRight:
            agent.heading = rotate_right(agent.heading);
            return ActionResult::Ok;
        default: break;
    }

    ObjectInstance* target = scene.find_object(action.target);
    if (!target || !target->cell) return ActionResult::OutOfRange;
    if (!within_interaction_range(agent, *target->cell)) return ActionResult::OutOfRange;

    switch (action.kind) {
        case ActionKind::PickUp: {
            if (agent.inventory) return ActionResult::Precondition;
            if (!is_pickupable(target->type)) return ActionResult::Precondition;
            int container = scene.container_of(target->id);
            if (container >= 0) {
                ObjectInstance* recep = scene.find_object(container);
                std::erase(recep->contents, target->id);
            } else {
                scene.set_occupant(*target->cell, -1);
            }
            agent.inventory = target->id;
            target->cell.reset();
            return ActionResult::Ok;
        }
        case ActionKind::Put: {
            if (!agent.inventory) return ActionResult::Precondition;
            if (!target->is_receptacle) return ActionResult::Precondition;
            ObjectInstance* held = scene.find_object(*agent.inventory);
            target->contents.push_back(held->id);
            held->cell = target->cell;
            agent.inventory.reset();
            return ActionResult::Ok;
        }
        case ActionKind::ToggleOn: {
            if (!target->is_appliance) return ActionResult::Precondition;
            target->states.powered = true;
            apply_appliance_transform(scene, *target);
            return ActionResult::Ok;
        }
        case ActionKind::ToggleOff: {
            if (!target->is_appliance) return ActionResult::Precondition;
            target->states.powered = false;
            return ActionResult::Ok;
        }
        case ActionKind::Slice: {
            if (!agent.inventory) return ActionResult::Precondition;
            const ObjectInstance* held = scene.find_object(*agent.inventory);
            if (!held || held->type != ObjectType::Knife) return ActionResult::Precondition;
            if (!is_sliceable(target->type)) return ActionResult::Precondition;
            target->states.sliced = true;
            return ActionResult::Ok;
        }
        default: return ActionResult::Precondition;
    }
}

} // namespace detail

// Transition: returns the successor scene and the action outcome. On any
// failure the returned scene is the unchanged input.
inline std::pair<Scene, ActionResult> step(const Scene& scene, const Action& action) {
    Scene next = scene;
    ActionResult result = detail::apply_action(next, action);
    if (!succeeded(result)) return {scene, result};
    return {std::move(next), result};
}

} // namespace lav
