#pragma once

// Low-level action vocabulary and per-action outcome.

#include <cstdint>
#include <optional>
#include <string>

namespace lav {

enum class ActionKind : std::uint8_t {
    MoveAhead,
    RotateLeft,
    RotateRight,
    PickUp,
    Put,
    ToggleOn,
    ToggleOff,
    Slice,
};

inline bool is_interaction(ActionKind k) {
    return k != ActionKind::MoveAhead && k != ActionKind::RotateLeft &&
           k != ActionKind::RotateRight;
}

struct Action {
    ActionKind kind = ActionKind::MoveAhead;
    int target = -1; // object id for interaction actions

    friend bool operator==(const Action&, const Action&) = default;
};

inline Action move_ahead() { return {ActionKind::MoveAhead, -1}; }
inline Action rotate_left_action() { return {ActionKind::RotateLeft, -1}; }
inline Action rotate_right_action() { return {ActionKind::RotateRight, -1}; }
inline Action pick_up(int id) { return {ActionKind::PickUp, id}; }
inline Action put_into(int id) { return {ActionKind::Put, id}; }
inline Action toggle_on(int id) { return {ActionKind::ToggleOn, id}; }
inline Action toggle_off(int id) { return {ActionKind::ToggleOff, id}; }
inline Action slice(int id) { return {ActionKind::Slice, id}; }

enum class ActionResult : std::uint8_t {
    Ok,
    Blocked,      // movement into a wall, object, or out of bounds
    OutOfRange,   // interaction target missing or not adjacent
    Precondition, // type/inventory precondition unmet
};

inline bool succeeded(ActionResult r) { return r == ActionResult::Ok; }

inline std::string action_kind_name(ActionKind k) {
    switch (k) {
        case ActionKind::MoveAhead: return "MoveAhead";
        case ActionKind::RotateLeft: return "RotateLeft";
        case ActionKind::RotateRight: return "RotateRight";
        case ActionKind::PickUp: return "PickUp";
        case ActionKind::Put: return "Put";
        case ActionKind::ToggleOn: return "ToggleOn";
        case ActionKind::ToggleOff: return "ToggleOff";
        case ActionKind::Slice: return "Slice";
    }
    return "?";
}

inline std::optional<ActionKind> action_kind_from_name(const std::string& s) {
    for (int i = 0; i < 8; ++i) {
        auto k = static_cast<ActionKind>(i);
        if (action_kind_name(k) == s) return k;
    }
    return std::nullopt;
}

inline std::string to_string(const Action& a) {
    std::string s = action_kind_name(a.kind);
    if (is_interaction(a.kind)) s += ":" + std::to_string(a.target);
    return s;
}

inline std::string to_string(ActionResult r) {
    switch (r) {
        case ActionResult::Ok: return "Ok";
        case ActionResult::Blocked: return "Failed:Blocked";
        case ActionResult::OutOfRange: return "Failed:OutOfRange";
        case ActionResult::Precondition: return "Failed:Precondition";
    }
    return "?";
}

inline std::optional<ActionResult> action_result_from_name(const std::string& s) {
    if (s == "Ok") return ActionResult::Ok;
    if (s == "Failed:Blocked") return ActionResult::Blocked;
    if (s == "Failed:OutOfRange") return ActionResult::OutOfRange;
    if (s == "Failed:Precondition") return ActionResult::Precondition;
    return std::nullopt;
}

} // namespace lav
