#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egogrid/geometry.hpp"
#include "egogrid/levels.hpp"
#include "egogrid/rng.hpp"

namespace egogrid {

// Entity classes across all four games. The avatar is held separately in
// GameState; empty floor is the absence of an entity.
enum class EntityKind : uint8_t {
    Wall = 0,
    Key = 1,
    Door = 2,
    Enemy = 3,
    Dirt = 4,
    Boulder = 5,
    Diamond = 6,
    Exit = 7,
    Gem = 8,
    Turret = 9,
    Bullet = 10,
};

std::string to_string(EntityKind kind);

struct Entity {
    EntityKind kind;
    Position pos;
    // Small per-entity payload: bullet flight direction, boulder falling flag.
    int8_t state = 0;
};

enum class Status : uint8_t { Running = 0, Win = 1, Loss = 2 };

std::string to_string(Status s);

// Full simulation state of one episode. Self-contained value type: holds its
// own RNG, safe to copy and to step on any one thread at a time.
struct GameState {
    GameId game = GameId::SimpleZelda;
    int height = 0;
    int width = 0;
    std::vector<Entity> entities;
    Position avatar{0, 0};
    Direction facing = Direction::Up;
    double score = 0.0;
    int tick = 0;
    Status status = Status::Running;
    SplitMix64 rng;
    // Game-specific counters.
    int diamonds_collected = 0;
    bool key_held = false;

    bool in_bounds(Position p) const {
        return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
    }
    bool done() const { return status != Status::Running; }

    // Index of the first entity at p (optionally of a given kind), or nullopt.
    std::optional<size_t> entity_at(Position p) const;
    std::optional<size_t> entity_at(Position p, EntityKind kind) const;
    int count(EntityKind kind) const;
    void remove_entity(size_t index);
};

struct StepResult {
    double reward = 0.0;
    bool done = false;
};

// Builds the initial state from a validated level. If random_facing, the
// avatar's facing is the first draw from the seeded episode RNG; otherwise Up.
// Throws ValidationError on invalid levels (avatar count, unknown symbol).
GameState init_state(const LevelSpec& level, uint64_t seed, bool random_facing);

// Tunables the rulesets expose. Defaults documented in docs/config.md.
struct RulesetParams {
    int enemy_move_period = 1;  // enemies move every N ticks
    int fire_period = 8;        // solarfox turret firing period
    int diamond_quota = 10;     // boulderdash exit requirement
};

// Advances one tick. Terminal states are absorbing: returns (0, true) without
// touching the state. Reward is exactly score(t+1) - score(t).
StepResult step(GameState& state, Action action, const RulesetParams& params = {});

inline std::pair<Position, Direction> avatar_pose(const GameState& state) {
    return {state.avatar, state.facing};
}

// Canonical text dump of the whole state (grid, entities, counters, RNG).
// Byte-identical dumps <=> identical states; layout documented in
// docs/formats.md.
std::string serialize_state(const GameState& state);

}  // namespace egogrid
