#pragma once

// Object type enumeration and per-type traits. Types fall into three
// rough groups: pickupable items, receptacles, and appliances (Sink,
// Fridge and Microwave are both).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lav {

enum class ObjectType : std::uint8_t {
    Bowl,
    Cup,
    Apple,
    Potato,
    Knife,
    Sink,
    Fridge,
    Microwave,
    Cabinet,
    Table,
    Lamp,
};

inline constexpr int kObjectTypeCount = 11;

inline constexpr std::array<ObjectType, kObjectTypeCount> all_object_types() {
    return {ObjectType::Bowl,   ObjectType::Cup,       ObjectType::Apple,
            ObjectType::Potato, ObjectType::Knife,     ObjectType::Sink,
            ObjectType::Fridge, ObjectType::Microwave, ObjectType::Cabinet,
            ObjectType::Table,  ObjectType::Lamp};
}

inline bool is_pickupable(ObjectType t) {
    switch (t) {
        case ObjectType::Bowl:
        case ObjectType::Cup:
        case ObjectType::Apple:
        case ObjectType::Potato:
        case ObjectType::Knife: return true;
        default: return false;
    }
}

inline bool is_receptacle_type(ObjectType t) {
    switch (t) {
        case ObjectType::Sink:
        case ObjectType::Fridge:
        case ObjectType::Microwave:
        case ObjectType::Cabinet:
        case ObjectType::Table: return true;
        default: return false;
    }
}

inline bool is_appliance_type(ObjectType t) {
    switch (t) {
        case ObjectType::Sink:
        case ObjectType::Fridge:
        case ObjectType::Microwave:
        case ObjectType::Lamp: return true;
        default: return false;
    }
}

inline bool is_sliceable(ObjectType t) {
    return t == ObjectType::Apple || t == ObjectType::Potato;
}

// Dishes start out dirty and are the clean-task targets.
inline bool is_dish(ObjectType t) { return t == ObjectType::Bowl || t == ObjectType::Cup; }

inline bool is_food(ObjectType t) { return t == ObjectType::Apple || t == ObjectType::Potato; }

inline std::string_view object_type_name(ObjectType t) {
    switch (t) {
        case ObjectType::Bowl: return "Bowl";
        case ObjectType::Cup: return "Cup";
        case ObjectType::Apple: return "Apple";
        case ObjectType::Potato: return "Potato";
        case ObjectType::Knife: return "Knife";
        case ObjectType::Sink: return "Sink";
        case ObjectType::Fridge: return "Fridge";
        case ObjectType::Microwave: return "Microwave";
        case ObjectType::Cabinet: return "Cabinet";
        case ObjectType::Table: return "Table";
        case ObjectType::Lamp: return "Lamp";
    }
    return "?";
}

inline std::optional<ObjectType> object_type_from_name(std::string_view name) {
    for (ObjectType t : all_object_types())
        if (object_type_name(t) == name) return t;
    return std::nullopt;
}

// One map character per type for the plain-text scene format.
inline char object_type_char(ObjectType t) {
    switch (t) {
        case ObjectType::Bowl: return 'b';
        case ObjectType::Cup: return 'c';
        case ObjectType::Apple: return 'a';
        case ObjectType::Potato: return 'p';
        case ObjectType::Knife: return 'k';
        case ObjectType::Sink: return 'S';
        case ObjectType::Fridge: return 'F';
        case ObjectType::Microwave: return 'M';
        case ObjectType::Cabinet: return 'C';
        case ObjectType::Table: return 'T';
        case ObjectType::Lamp: return 'L';
    }
    return '?';
}

enum class Temperature : std::uint8_t { Room, Hot, Cold };

inline std::string_view temperature_name(Temperature t) {
    switch (t) {
        case Temperature::Room: return "room";
        case Temperature::Hot: return "hot";
        case Temperature::Cold: return "cold";
    }
    return "?";
}

inline std::optional<Temperature> temperature_from_name(std::string_view name) {
    if (name == "room") return Temperature::Room;
    if (name == "hot") return Temperature::Hot;
    if (name == "cold") return Temperature::Cold;
    return std::nullopt;
}

} // namespace lav
