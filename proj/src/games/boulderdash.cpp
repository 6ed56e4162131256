#include "egogrid/games.hpp"

namespace egogrid {

namespace {

constexpr int8_t kFalling = 1;

void avatar_move(GameState& s, Direction d, const RulesetParams& params) {
    Position t = moved(s.avatar, d);
    if (!s.in_bounds(t)) return;
    if (s.entity_at(t, EntityKind::Wall) || s.entity_at(t, EntityKind::Boulder)) return;
    if (s.entity_at(t, EntityKind::Exit) && s.diamonds_collected < params.diamond_quota) {
        return;  // exit stays shut until the quota is met
    }

    if (auto dirt = s.entity_at(t, EntityKind::Dirt)) {
        s.remove_entity(*dirt);  // dig
    }
    if (auto diamond = s.entity_at(t, EntityKind::Diamond)) {
        s.remove_entity(*diamond);
        s.diamonds_collected += 1;
        s.score += score::kDiamond;
    }
    s.avatar = t;
    if (s.entity_at(t, EntityKind::Enemy)) {
        s.score += score::kDeath;
        s.status = Status::Loss;
        return;
    }
    if (s.entity_at(t, EntityKind::Exit)) {
        s.score += score::kWin;
        s.status = Status::Win;
    }
}

// A boulder over empty space falls one row per tick; a boulder that was
// already falling crushes whatever it lands on (avatar or enemy). A resting
// boulder never crushes, so standing directly underneath one is safe.
void apply_gravity(GameState& s) {
    for (int r = s.height - 2; r >= 0; --r) {
        for (int c = 0; c < s.width; ++c) {
            auto idx = s.entity_at({r, c}, EntityKind::Boulder);
            if (!idx) continue;
            Entity& boulder = s.entities[*idx];
            Position below{r + 1, c};
            bool occupied = s.entity_at(below).has_value();
            if (!occupied && below != s.avatar) {
                boulder.pos = below;
                boulder.state = kFalling;
                continue;
            }
            if (boulder.state == kFalling) {
                if (below == s.avatar) {
                    boulder.pos = below;
                    s.score += score::kDeath;
                    s.status = Status::Loss;
                    return;
                }
                if (auto enemy = s.entity_at(below, EntityKind::Enemy)) {
                    s.remove_entity(*enemy);  // invalidates idx/boulder
                    auto again = s.entity_at({r, c}, EntityKind::Boulder);
                    s.entities[*again].pos = below;
                    continue;
                }
            }
            boulder.state = 0;
        }
    }
}

void move_enemies(GameState& s) {
    for (size_t i = 0; i < s.entities.size(); ++i) {
        if (s.entities[i].kind != EntityKind::Enemy) continue;
        Position free_cells[4];
        int n_free = 0;
        for (int d = 0; d < kNumDirections; ++d) {
            Position t = moved(s.entities[i].pos, static_cast<Direction>(d));
            if (!s.in_bounds(t)) continue;
            if (s.entity_at(t)) continue;  // enemies only roam dug-out space
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

void boulderdash_tick(GameState& s, Action action, const RulesetParams& params) {
    if (is_movement(action)) {
        Direction d = action_direction(action);
        if (d != s.facing) {
            s.facing = d;
        } else {
            avatar_move(s, d, params);
            if (s.done()) return;
        }
    }

    apply_gravity(s);
    if (s.done()) return;

    if ((s.tick + 1) % params.enemy_move_period == 0) {
        move_enemies(s);
    }
}

}  // namespace egogrid
