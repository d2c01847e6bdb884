#pragma once

// Goal conditions and the tasks built from them. A task is a conjunction
// of conditions, each checkable against a Scene without side effects.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/objects.hpp"
#include "lav/scene.hpp"

namespace lav {

enum class StateField : std::uint8_t { Dirty, TemperatureField, Sliced, Powered };

inline std::string_view state_field_name(StateField f) {
    switch (f) {
        case StateField::Dirty: return "dirty";
        case StateField::TemperatureField: return "temperature";
        case StateField::Sliced: return "sliced";
        case StateField::Powered: return "powered";
    }
    return "?";
}

inline std::optional<StateField> state_field_from_name(std::string_view s) {
    if (s == "dirty") return StateField::Dirty;
    if (s == "temperature") return StateField::TemperatureField;
    if (s == "sliced") return StateField::Sliced;
    if (s == "powered") return StateField::Powered;
    return std::nullopt;
}

struct GoalCondition {
    enum class Kind : std::uint8_t { InReceptacle, State };

    Kind kind = Kind::State;
    ObjectType object = ObjectType::Bowl;
    // InReceptacle only:
    ObjectType receptacle = ObjectType::Cabinet;
    // State only:
    StateField field = StateField::Dirty;
    bool bool_value = false;
    Temperature temp_value = Temperature::Room;

    static GoalCondition in_receptacle(ObjectType obj, ObjectType recep) {
        GoalCondition c;
        c.kind = Kind::InReceptacle;
        c.object = obj;
        c.receptacle = recep;
        return c;
    }

    static GoalCondition state(ObjectType obj, StateField f, bool value) {
        GoalCondition c;
        c.kind = Kind::State;
        c.object = obj;
        c.field = f;
        c.bool_value = value;
        return c;
    }

    static GoalCondition temperature(ObjectType obj, Temperature value) {
        GoalCondition c;
        c.kind = Kind::State;
        c.object = obj;
        c.field = StateField::TemperatureField;
        c.temp_value = value;
        return c;
    }

    bool satisfied(const Scene& scene) const {
        if (kind == Kind::InReceptacle) {
            for (const auto& recep : scene.objects) {
                if (recep.type != receptacle || !recep.is_receptacle) continue;
                for (int id : recep.contents) {
                    const ObjectInstance* obj = scene.find_object(id);
                    if (obj && obj->type == object) return true;
                }
            }
            return false;
        }
        for (const auto& obj : scene.objects) {
            if (obj.type != object) continue;
            switch (field) {
                case StateField::Dirty:
                    if (obj.states.dirty == bool_value) return true;
                    break;
                case StateField::TemperatureField:
                    if (obj.states.temperature == temp_value) return true;
                    break;
                case StateField::Sliced:
                    if (obj.states.sliced == bool_value) return true;
                    break;
                case StateField::Powered:
                    if (obj.states.powered == bool_value) return true;
                    break;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (kind == Kind::InReceptacle) {
            os << "InReceptacle:" << object_type_name(object) << ":"
               << object_type_name(receptacle);
        } else {
            os << "State:" << object_type_name(object) << ":" << state_field_name(field) << ":";
            if (field == StateField::TemperatureField)
                os << temperature_name(temp_value);
            else
                os << (bool_value ? "1" : "0");
        }
        return os.str();
    }

    friend bool operator==(const GoalCondition&, const GoalCondition&) = default;
};

struct TaskSpec {
    std::vector<GoalCondition> goal_conditions;
    int expert_path_length = 0; // reference length, filled by the generator

    friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

// Fraction of satisfied goal conditions in [0, 1]. Pure.
inline double check_goal_conditions(const Scene& scene, const TaskSpec& task) {
    if (task.goal_conditions.empty())
        throw std::invalid_argument("task has no goal conditions");
    int satisfied = 0;
    for (const auto& c : task.goal_conditions)
        if (c.satisfied(scene)) ++satisfied;
    return static_cast<double>(satisfied) / static_cast<double>(task.goal_conditions.size());
}

inline int count_satisfied_conditions(const Scene& scene, const TaskSpec& task) {
    int satisfied = 0;
    for (const auto& c : task.goal_conditions)
        if (c.satisfied(scene)) ++satisfied;
    return satisfied;
}

} // namespace lav
