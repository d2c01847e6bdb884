#pragma once

// Plain-text scene format: a header of object-state records followed by
// one character per cell ('#' wall, '.' floor, '@' agent, letters for
// object types). The header is authoritative for object state; the map
// carries the walls and is written for human inspection.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/scene.hpp"

namespace lav {

inline std::string serialize_scene(const Scene& scene) {
    std::ostringstream os;
    os << "scene\n";
    os << "size " << scene.width << " " << scene.height << "\n";
    os << "seed " << scene.rng_seed << "\n";
    os << "agent " << scene.agent.cell.x << " " << scene.agent.cell.y << " "
       << heading_char(scene.agent.heading) << " held=";
    if (scene.agent.inventory)
        os << *scene.agent.inventory;
    else
        os << "-";
    os << "\n";

    std::vector<const ObjectInstance*> ordered;
    for (const auto& o : scene.objects) ordered.push_back(&o);
    std::sort(ordered.begin(), ordered.end(),
              [](const ObjectInstance* a, const ObjectInstance* b) { return a->id < b->id; });
    for (const ObjectInstance* o : ordered) {
        os << "object " << o->id << " " << object_type_name(o->type) << " ";
        if (o->cell)
            os << o->cell->x << " " << o->cell->y;
        else
            os << "- -";
        os << " dirty=" << (o->states.dirty ? 1 : 0)
           << " temp=" << temperature_name(o->states.temperature)
           << " sliced=" << (o->states.sliced ? 1 : 0)
           << " powered=" << (o->states.powered ? 1 : 0) << " in=";
        int container = scene.container_of(o->id);
        if (container >= 0)
            os << container;
        else
            os << "-";
        os << "\n";
    }

    os << "map\n";
    for (int y = 0; y < scene.height; ++y) {
        std::string row(static_cast<std::size_t>(scene.width), '.');
        for (int x = 0; x < scene.width; ++x)
            if (scene.is_wall({x, y})) row[static_cast<std::size_t>(x)] = '#';
        for (const ObjectInstance* o : ordered) {
            if (!o->cell || o->cell->y != y) continue;
            if (scene.container_of(o->id) >= 0) continue;
            row[static_cast<std::size_t>(o->cell->x)] = object_type_char(o->type);
        }
        if (scene.agent.cell.y == y) row[static_cast<std::size_t>(scene.agent.cell.x)] = '@';
        os << row << "\n";
    }
    os << "end\n";
    return os.str();
}

inline Scene parse_scene(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto fail = [](const std::string& why) -> void {
        throw std::runtime_error("scene parse error: " + why);
    };

    if (!std::getline(is, line) || line != "scene") fail("missing scene header");

    Scene scene;
    std::vector<std::pair<int, int>> containers; // (object id, container id)
    bool saw_size = false;

    while (std::getline(is, line)) {
        if (line == "map") break;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "size") {
            int w = 0, h = 0;
            ls >> w >> h;
            if (w <= 0 || h <= 0) fail("bad size");
            scene = Scene(w, h);
            saw_size = true;
        } else if (key == "seed") {
            ls >> scene.rng_seed;
        } else if (key == "agent") {
            std::string hs, held;
            ls >> scene.agent.cell.x >> scene.agent.cell.y >> hs >> held;
            if (hs.size() != 1 || !heading_from_char(hs[0], scene.agent.heading))
                fail("bad agent heading");
            if (held.rfind("held=", 0) != 0) fail("bad agent record");
            std::string held_val = held.substr(5);
            if (held_val != "-") scene.agent.inventory = std::stoi(held_val);
        } else if (key == "object") {
            if (!saw_size) fail("object before size");
            ObjectInstance obj;
            std::string type_name, xs, ys;
            ls >> obj.id >> type_name >> xs >> ys;
            auto type = object_type_from_name(type_name);
            if (!type) fail("unknown object type " + type_name);
            obj.type = *type;
            obj.is_receptacle = is_receptacle_type(obj.type);
            obj.is_appliance = is_appliance_type(obj.type);
            if (xs != "-") obj.cell = Cell{std::stoi(xs), std::stoi(ys)};
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) fail("bad object field " + field);
                std::string name = field.substr(0, eq);
                std::string value = field.substr(eq + 1);
                if (name == "dirty") {
                    obj.states.dirty = value == "1";
                } else if (name == "temp") {
                    auto t = temperature_from_name(value);
                    if (!t) fail("bad temperature " + value);
                    obj.states.temperature = *t;
                } else if (name == "sliced") {
                    obj.states.sliced = value == "1";
                } else if (name == "powered") {
                    obj.states.powered = value == "1";
                } else if (name == "in") {
                    if (value != "-") containers.emplace_back(obj.id, std::stoi(value));
                } else {
                    fail("unknown object field " + name);
                }
            }
            scene.objects.push_back(obj);
        } else if (!key.empty()) {
            fail("unknown record " + key);
        }
    }

    if (!saw_size) fail("missing size");
    for (int y = 0; y < scene.height; ++y) {
        if (!std::getline(is, line)) fail("truncated map");
        if (static_cast<int>(line.size()) < scene.width) fail("short map row");
        for (int x = 0; x < scene.width; ++x)
            if (line[static_cast<std::size_t>(x)] == '#') scene.set_wall({x, y}, true);
    }
    if (!std::getline(is, line) || line != "end") fail("missing end marker");

    for (auto [id, container] : containers) {
        ObjectInstance* recep = scene.find_object(container);
        if (!recep) fail("container id " + std::to_string(container) + " missing");
        recep->contents.push_back(id);
    }
    scene.rebuild_occupancy();
    return scene;
}

} // namespace lav
