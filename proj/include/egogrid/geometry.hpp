#pragma once

#include <cstdint>
#include <string>

namespace egogrid {

struct Position {
    int row = 0;  // 0 at top
    int col = 0;  // 0 at left

    bool operator==(const Position&) const = default;
};

// Clockwise order; the integer values drive the 90-degree rotation math.
enum class Direction : uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

enum class Action : uint8_t { Noop = 0, Up = 1, Right = 2, Down = 3, Left = 4, Use = 5 };

constexpr int kNumDirections = 4;

inline Direction rotate_right(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 1) % 4);
}

inline Direction rotate_left(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 3) % 4);
}

inline Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

// Unit step for a direction, in (row, col) tile coordinates.
inline Position direction_delta(Direction d) {
    switch (d) {
        case Direction::Up: return {-1, 0};
        case Direction::Right: return {0, 1};
        case Direction::Down: return {1, 0};
        case Direction::Left: return {0, -1};
    }
    return {0, 0};
}

inline Position moved(Position p, Direction d) {
    Position delta = direction_delta(d);
    return {p.row + delta.row, p.col + delta.col};
}

inline bool is_movement(Action a) {
    return a == Action::Up || a == Action::Right || a == Action::Down || a == Action::Left;
}

// Valid only for movement actions.
inline Direction action_direction(Action a) {
    return static_cast<Direction>(static_cast<int>(a) - 1);
}

inline Action direction_action(Direction d) {
    return static_cast<Action>(static_cast<int>(d) + 1);
}

inline std::string to_string(Direction d) {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::Right: return "right";
        case Direction::Down: return "down";
        case Direction::Left: return "left";
    }
    return "?";
}

inline std::string to_string(Action a) {
    switch (a) {
        case Action::Noop: return "noop";
        case Action::Up: return "up";
        case Action::Right: return "right";
        case Action::Down: return "down";
        case Action::Left: return "left";
        case Action::Use: return "use";
    }
    return "?";
}

}  // namespace egogrid
