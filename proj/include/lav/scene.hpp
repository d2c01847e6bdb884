#pragma once

// Ground-truth world state: grid, walls, object instances, agent.
// Pure value type; copying a Scene yields an independent world.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "lav/geometry.hpp"
#include "lav/objects.hpp"

namespace lav {

struct ObjectStates {
    bool dirty = false;
    Temperature temperature = Temperature::Room;
    bool sliced = false;
    bool powered = false;

    friend bool operator==(const ObjectStates&, const ObjectStates&) = default;
};

struct ObjectInstance {
    int id = -1;
    ObjectType type = ObjectType::Bowl;
    // Empty while carried by the agent; contained objects share the
    // receptacle's cell.
    std::optional<Cell> cell;
    bool is_receptacle = false;
    bool is_appliance = false;
    std::vector<int> contents;
    ObjectStates states;

    friend bool operator==(const ObjectInstance&, const ObjectInstance&) = default;
};

inline ObjectInstance make_object(int id, ObjectType type, Cell cell) {
    ObjectInstance obj;
    obj.id = id;
    obj.type = type;
    obj.cell = cell;
    obj.is_receptacle = is_receptacle_type(type);
    obj.is_appliance = is_appliance_type(type);
    if (is_dish(type)) obj.states.dirty = true;
    return obj;
}

struct AgentState {
    Cell cell;
    Heading heading = Heading::North;
    std::optional<int> inventory;

    friend bool operator==(const AgentState&, const AgentState&) = default;
};

class Scene {
  public:
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> walls; // row-major, 1 = wall
    std::vector<ObjectInstance> objects;
    AgentState agent;
    std::uint64_t rng_seed = 0;

    Scene() = default;
    Scene(int w, int h) : width(w), height(h), walls(static_cast<std::size_t>(w) * h, 0) {
        rebuild_occupancy();
    }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }

    bool is_wall(Cell c) const {
        return !in_bounds(c) || walls[index(c)] != 0;
    }

    void set_wall(Cell c, bool w) {
        walls[index(c)] = w ? 1 : 0;
        if (w) occupancy_[index(c)] = -1;
    }

    // Id of the standalone object (or receptacle) sitting on a cell, -1 if none.
    int occupant_id(Cell c) const {
        if (!in_bounds(c)) return -1;
        return occupancy_[index(c)];
    }

    // Walls and object cells both block movement and sight.
    bool is_blocked(Cell c) const { return is_wall(c) || occupant_id(c) >= 0; }

    bool is_free_floor(Cell c) const { return in_bounds(c) && !is_blocked(c); }

    const ObjectInstance* find_object(int id) const {
        for (const auto& o : objects)
            if (o.id == id) return &o;
        return nullptr;
    }

    ObjectInstance* find_object(int id) {
        for (auto& o : objects)
            if (o.id == id) return &o;
        return nullptr;
    }

    const ObjectInstance* find_object_of_type(ObjectType t) const {
        for (const auto& o : objects)
            if (o.type == t) return &o;
        return nullptr;
    }

    // Id of the object containing `id`, or -1 when standalone/carried.
    int container_of(int id) const {
        for (const auto& o : objects)
            for (int c : o.contents)
                if (c == id) return o.id;
        return -1;
    }

    int add_object(ObjectType type, Cell cell) {
        int id = next_id();
        objects.push_back(make_object(id, type, cell));
        occupancy_[index(cell)] = id;
        return id;
    }

    // Rebuild the cell -> occupant index. Contained objects map to their
    // receptacle, so only top-level objects appear.
    void rebuild_occupancy() {
        occupancy_.assign(static_cast<std::size_t>(width) * height, -1);
        for (const auto& o : objects) {
            if (!o.cell) continue;
            if (container_of(o.id) >= 0) continue;
            occupancy_[index(*o.cell)] = o.id;
        }
    }

    void set_occupant(Cell c, int id) { occupancy_[index(c)] = id; }

    friend bool operator==(const Scene& a, const Scene& b) {
        return a.width == b.width && a.height == b.height && a.walls == b.walls &&
               a.objects == b.objects && a.agent == b.agent && a.rng_seed == b.rng_seed;
    }

  private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y) * width + c.x;
    }

    int next_id() const {
        int id = 0;
        for (const auto& o : objects) id = std::max(id, o.id + 1);
        return id;
    }

    std::vector<int> occupancy_;
};

} // namespace lav
