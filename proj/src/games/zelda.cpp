#include "egogrid/games.hpp"

namespace egogrid {

namespace {

bool zelda_enterable(const GameState& s, Position t) {
    if (!s.in_bounds(t)) return false;
    if (s.entity_at(t, EntityKind::Wall)) return false;
    // A closed door blocks until the key is held.
    if (s.entity_at(t, EntityKind::Door) && !s.key_held) return false;
    return true;
}

void move_avatar(GameState& s, Position t) {
    s.avatar = t;
    if (auto key = s.entity_at(t, EntityKind::Key)) {
        s.remove_entity(*key);
        s.key_held = true;
        s.score += score::kKeyPickup;
    }
    if (s.entity_at(t, EntityKind::Enemy)) {
        s.score += score::kDeath;
        s.status = Status::Loss;
        return;
    }
    if (s.entity_at(t, EntityKind::Door)) {
        s.score += score::kWin;
        s.status = Status::Win;
    }
}

// Uniform random move among free neighbor cells; stays put when boxed in. The
// avatar's cell counts as free (that is how an enemy kills).
void move_enemies(GameState& s) {
    for (size_t i = 0; i < s.entities.size(); ++i) {
        if (s.entities[i].kind != EntityKind::Enemy) continue;
        Position free_cells[4];
        int n_free = 0;
        for (int d = 0; d < kNumDirections; ++d) {
            Position t = moved(s.entities[i].pos, static_cast<Direction>(d));
            if (!s.in_bounds(t)) continue;
            if (auto j = s.entity_at(t)) {
                EntityKind k = s.entities[*j].kind;
                if (k == EntityKind::Wall || k == EntityKind::Door || k == EntityKind::Key ||
                    k == EntityKind::Enemy) {
                    continue;
                }
            }
            free_cells[n_free++] = t;
        }
        if (n_free == 0) continue;
        Position t = free_cells[s.rng.below(static_cast<uint32_t>(n_free))];
        s.entities[i].pos = t;
        if (t == s.avatar) {
            s.score += score::kDeath;
            s.status = Status::Loss;
            return;
        }
    }
}

}  // namespace

void zelda_tick(GameState& s, Action action, const RulesetParams& params) {
    const bool simple = s.game == GameId::SimpleZelda;

    if (action == Action::Use && !simple) {
        // Sword: one tile ahead, no cooldown.
        Position ahead = moved(s.avatar, s.facing);
        if (auto enemy = s.entity_at(ahead, EntityKind::Enemy)) {
            s.remove_entity(*enemy);
            s.score += score::kEnemyKilled;
        }
    } else if (is_movement(action)) {
        Direction d = action_direction(action);
        if (d != s.facing) {
            s.facing = d;  // turn in place first
        } else if (Position t = moved(s.avatar, d); zelda_enterable(s, t)) {
            move_avatar(s, t);
            if (s.done()) return;
        }
    }

    if (!simple && (s.tick + 1) % params.enemy_move_period == 0) {
        move_enemies(s);
    }
}

}  // namespace egogrid
