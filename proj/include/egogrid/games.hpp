#pragma once

#include <string>
#include <vector>

#include "egogrid/state.hpp"

namespace egogrid {

// Static description of one game: tile alphabet, action set and score table.
// Immutable after construction; shareable across threads.
struct Ruleset {
    GameId game;
    RulesetParams params;

    const std::vector<Action>& action_set() const;
    // One symbol per placeable tile, including floor.
    std::string tile_alphabet() const;
    // Entity produced by a level symbol, if any ('.' is floor except in
    // Boulderdash where it is dirt).
    std::optional<EntityKind> symbol_entity(char symbol) const;
    char entity_symbol(EntityKind kind) const;

    StepResult step(GameState& state, Action action) const {
        return egogrid::step(state, action, params);
    }
};

Ruleset ruleset_for(GameId game, RulesetParams params = {});

// Per-game tick functions. `step` dispatches here after handling terminal
// absorption and the tick/score bookkeeping.
void zelda_tick(GameState& state, Action action, const RulesetParams& params);
void boulderdash_tick(GameState& state, Action action, const RulesetParams& params);
void dsolarfox_tick(GameState& state, Action action, const RulesetParams& params);

// Score table (docs/config.md). Only win rate feeds the reports; scores exist
// to shape learning.
namespace score {
inline constexpr double kKeyPickup = 1.0;
inline constexpr double kWin = 1.0;
inline constexpr double kEnemyKilled = 2.0;
inline constexpr double kDiamond = 1.0;
inline constexpr double kGem = 1.0;
inline constexpr double kDeath = -1.0;
}  // namespace score

}  // namespace egogrid
