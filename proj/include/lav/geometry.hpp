#pragma once

// Grid geometry: cells, headings, distances. y grows downward, so
// North is -y and rotating right from North gives East.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace lav {

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        return static_cast<std::size_t>(c.x) * 73856093u ^ static_cast<std::size_t>(c.y) * 19349663u;
    }
};

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
inline Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

inline int manhattan(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }
inline int chebyshev(Cell a, Cell b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

enum class Heading : std::uint8_t { North, East, South, West };

inline Cell heading_delta(Heading h) {
    switch (h) {
        case Heading::North: return {0, -1};
        case Heading::East: return {1, 0};
        case Heading::South: return {0, 1};
        case Heading::West: return {-1, 0};
    }
    return {0, 0};
}

inline Heading rotate_right(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

inline Heading rotate_left(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

// Signed number of right turns (-1, 0, 1, 2) from one heading to another.
inline int turns_between(Heading from, Heading to) {
    int d = (static_cast<int>(to) - static_cast<int>(from) + 4) % 4;
    return d == 3 ? -1 : d;
}

inline char heading_char(Heading h) {
    switch (h) {
        case Heading::North: return 'N';
        case Heading::East: return 'E';
        case Heading::South: return 'S';
        case Heading::West: return 'W';
    }
    return '?';
}

inline bool heading_from_char(char c, Heading& out) {
    switch (c) {
        case 'N': out = Heading::North; return true;
        case 'E': out = Heading::East; return true;
        case 'S': out = Heading::South; return true;
        case 'W': out = Heading::West; return true;
        default: return false;
    }
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Rotate by phi radians; positive phi turns toward the agent's right.
inline Vec2 rotate(Vec2 v, double phi) {
    double c = std::cos(phi);
    double s = std::sin(phi);
    return {v.x * c - v.y * s, v.x * s + v.y * c};
}

inline Vec2 heading_vec(Heading h) {
    Cell d = heading_delta(h);
    return {static_cast<double>(d.x), static_cast<double>(d.y)};
}

} // namespace lav
