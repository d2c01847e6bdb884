#pragma once

// Fixed per-subtask macro table: the low-level action sequence an agent
// runs once its target is inside interaction range. Appliance subtasks
// share one shape: load, power-cycle, retrieve.

#include <stdexcept>
#include <vector>

#include "lav/actions.hpp"
#include "lav/plan.hpp"

namespace lav {

struct MissingHeldObject : std::runtime_error {
    MissingHeldObject()
        : std::runtime_error("macro requires a held object but inventory is empty") {}
};

inline int macro_length(Subtask s) {
    switch (s) {
        case Subtask::Clean:
        case Subtask::Heat:
        case Subtask::Cool: return 4;
        default: return 1;
    }
}

// Expands a subtask into low-level actions. `target_id` is the resolved
// interaction target (appliance for Clean/Heat/Cool), `held_id` the object
// currently carried, -1 for none.
inline std::vector<Action> execute_macro(Subtask subtask, int target_id, int held_id) {
    switch (subtask) {
        case Subtask::PickUp: return {pick_up(target_id)};
        case Subtask::Toggle: return {toggle_on(target_id)};
        case Subtask::Slice: return {slice(target_id)};
        case Subtask::Place:
            if (held_id < 0) throw MissingHeldObject();
            return {put_into(target_id)};
        case Subtask::Clean:
        case Subtask::Heat:
        case Subtask::Cool:
            if (held_id < 0) throw MissingHeldObject();
            return {put_into(target_id), toggle_on(target_id), toggle_off(target_id),
                    pick_up(held_id)};
    }
    return {};
}

} // namespace lav
