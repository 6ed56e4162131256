#include "egogrid/state.hpp"

#include <cinttypes>
#include <cstdio>

#include "egogrid/errors.hpp"
#include "egogrid/games.hpp"

namespace egogrid {

std::string to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Wall: return "wall";
        case EntityKind::Key: return "key";
        case EntityKind::Door: return "door";
        case EntityKind::Enemy: return "enemy";
        case EntityKind::Dirt: return "dirt";
        case EntityKind::Boulder: return "boulder";
        case EntityKind::Diamond: return "diamond";
        case EntityKind::Exit: return "exit";
        case EntityKind::Gem: return "gem";
        case EntityKind::Turret: return "turret";
        case EntityKind::Bullet: return "bullet";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Running: return "running";
        case Status::Win: return "win";
        case Status::Loss: return "loss";
    }
    return "?";
}

std::optional<size_t> GameState::entity_at(Position p) const {
    for (size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].pos == p) return i;
    }
    return std::nullopt;
}

std::optional<size_t> GameState::entity_at(Position p, EntityKind kind) const {
    for (size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].pos == p && entities[i].kind == kind) return i;
    }
    return std::nullopt;
}

int GameState::count(EntityKind kind) const {
    int n = 0;
    for (const Entity& e : entities) {
        if (e.kind == kind) ++n;
    }
    return n;
}

void GameState::remove_entity(size_t index) {
    entities.erase(entities.begin() + static_cast<ptrdiff_t>(index));
}

GameState init_state(const LevelSpec& level, uint64_t seed, bool random_facing) {
    Ruleset rules = ruleset_for(level.game);
    GameState state;
    state.game = level.game;
    state.height = level.height();
    state.width = level.width();
    state.rng = SplitMix64(seed);

    int avatars = 0;
    for (int r = 0; r < state.height; ++r) {
        if (static_cast<int>(level.rows[static_cast<size_t>(r)].size()) != state.width) {
            throw ValidationError("level '" + level.name + "': row " + std::to_string(r) +
                                  " has width " +
                                  std::to_string(level.rows[static_cast<size_t>(r)].size()) +
                                  ", expected " + std::to_string(state.width));
        }
        for (int c = 0; c < state.width; ++c) {
            char sym = level.at(r, c);
            if (sym == 'A') {
                ++avatars;
                if (avatars > 1) {
                    throw ValidationError("level '" + level.name +
                                          "': second avatar marker at row " + std::to_string(r) +
                                          ", col " + std::to_string(c));
                }
                state.avatar = {r, c};
                continue;
            }
            auto kind = rules.symbol_entity(sym);
            if (!kind.has_value()) {
                if (rules.tile_alphabet().find(sym) == std::string::npos) {
                    throw ValidationError("level '" + level.name + "': unknown symbol '" +
                                          std::string(1, sym) + "' at row " + std::to_string(r) +
                                          ", col " + std::to_string(c));
                }
                continue;  // floor / empty
            }
            state.entities.push_back(Entity{*kind, {r, c}, 0});
        }
    }
    if (avatars == 0) {
        throw ValidationError("level '" + level.name + "': no avatar marker");
    }
    if (random_facing) {
        state.facing = static_cast<Direction>(state.rng.below(4));
    }
    return state;
}

StepResult step(GameState& state, Action action, const RulesetParams& params) {
    if (state.done()) {
        return {0.0, true};
    }
    const double score_before = state.score;
    switch (state.game) {
        case GameId::SimpleZelda:
        case GameId::Zelda:
            zelda_tick(state, action, params);
            break;
        case GameId::Boulderdash:
            boulderdash_tick(state, action, params);
            break;
        case GameId::DSolarfox:
            dsolarfox_tick(state, action, params);
            break;
    }
    state.tick += 1;
    return {state.score - score_before, state.done()};
}

std::string serialize_state(const GameState& state) {
    std::string out;
    out.reserve(64 + state.entities.size() * 24);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "egogrid-state v1\ngame=%s h=%d w=%d\n",
                  to_string(state.game).c_str(), state.height, state.width);
    out += buf;
    std::snprintf(buf, sizeof(buf), "tick=%d status=%s score=%.17g\n", state.tick,
                  to_string(state.status).c_str(), state.score);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "avatar=%d,%d facing=%s key=%d diamonds=%d rng=%" PRIu64 "\n",
                  state.avatar.row, state.avatar.col, to_string(state.facing).c_str(),
                  state.key_held ? 1 : 0, state.diamonds_collected, state.rng.state());
    out += buf;
    for (const Entity& e : state.entities) {
        std::snprintf(buf, sizeof(buf), "entity %s %d,%d %d\n", to_string(e.kind).c_str(),
                      e.pos.row, e.pos.col, static_cast<int>(e.state));
        out += buf;
    }
    return out;
}

}  // namespace egogrid
