#pragma once

// Plans: ordered (subtask, target object type) pairs. The language module
// produces them, the action module consumes them.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lav/objects.hpp"

namespace lav {

enum class Subtask : std::uint8_t { PickUp, Place, Toggle, Clean, Cool, Heat, Slice };

inline constexpr int kSubtaskCount = 7;

inline std::string_view subtask_name(Subtask s) {
    switch (s) {
        case Subtask::PickUp: return "PickUp";
        case Subtask::Place: return "Place";
        case Subtask::Toggle: return "Toggle";
        case Subtask::Clean: return "Clean";
        case Subtask::Cool: return "Cool";
        case Subtask::Heat: return "Heat";
        case Subtask::Slice: return "Slice";
    }
    return "?";
}

inline std::optional<Subtask> subtask_from_name(std::string_view s) {
    for (int i = 0; i < kSubtaskCount; ++i) {
        auto v = static_cast<Subtask>(i);
        if (subtask_name(v) == s) return v;
    }
    return std::nullopt;
}

// Appliance each appliance-mediated subtask operates through.
inline std::optional<ObjectType> subtask_appliance(Subtask s) {
    switch (s) {
        case Subtask::Clean: return ObjectType::Sink;
        case Subtask::Heat: return ObjectType::Microwave;
        case Subtask::Cool: return ObjectType::Fridge;
        default: return std::nullopt;
    }
}

struct PlanStep {
    Subtask subtask = Subtask::PickUp;
    ObjectType object = ObjectType::Bowl;

    friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct Plan {
    std::vector<PlanStep> steps;

    bool empty() const { return steps.empty(); }

    friend bool operator==(const Plan&, const Plan&) = default;
};

inline std::string to_string(const Plan& plan) {
    std::ostringstream os;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        if (i) os << " ";
        os << subtask_name(plan.steps[i].subtask) << ":"
           << object_type_name(plan.steps[i].object);
    }
    return os.str();
}

inline std::optional<Plan> plan_from_string(const std::string& text) {
    Plan plan;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        auto colon = token.find(':');
        if (colon == std::string::npos) return std::nullopt;
        auto sub = subtask_from_name(token.substr(0, colon));
        auto obj = object_type_from_name(token.substr(colon + 1));
        if (!sub || !obj) return std::nullopt;
        plan.steps.push_back({*sub, *obj});
    }
    if (plan.steps.empty()) return std::nullopt;
    return plan;
}

} // namespace lav
