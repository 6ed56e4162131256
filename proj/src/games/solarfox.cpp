#include "egogrid/games.hpp"

#include <algorithm>

namespace egogrid {

namespace {

void die(GameState& s) {
    s.score += score::kDeath;
    s.status = Status::Loss;
}

// Bullets aim along the axis with the larger offset to the avatar; ties go
// vertical.
Direction aim_at(Position from, Position target) {
    int dr = target.row - from.row;
    int dc = target.col - from.col;
    if (std::abs(dr) >= std::abs(dc) && dr != 0) {
        return dr < 0 ? Direction::Up : Direction::Down;
    }
    if (dc != 0) {
        return dc < 0 ? Direction::Left : Direction::Right;
    }
    return Direction::Up;
}

bool blocks_bullet(const GameState& s, Position p) {
    return s.entity_at(p, EntityKind::Wall).has_value() ||
           s.entity_at(p, EntityKind::Turret).has_value();
}

void move_bullets(GameState& s) {
    std::vector<size_t> dead;
    for (size_t i = 0; i < s.entities.size(); ++i) {
        if (s.entities[i].kind != EntityKind::Bullet) continue;
        Position t = moved(s.entities[i].pos, static_cast<Direction>(s.entities[i].state));
        if (!s.in_bounds(t) || blocks_bullet(s, t)) {
            dead.push_back(i);
            continue;
        }
        s.entities[i].pos = t;
        if (t == s.avatar) {
            die(s);
            return;
        }
    }
    for (auto it = dead.rbegin(); it != dead.rend(); ++it) {
        s.remove_entity(*it);
    }
}

void fire_turrets(GameState& s) {
    // Collect first; spawning must not re-trigger on new entities.
    std::vector<Position> turrets;
    for (const Entity& e : s.entities) {
        if (e.kind == EntityKind::Turret) turrets.push_back(e.pos);
    }
    for (Position t : turrets) {
        Direction dir = aim_at(t, s.avatar);
        Position spawn = moved(t, dir);
        if (!s.in_bounds(spawn) || blocks_bullet(s, spawn)) continue;
        s.entities.push_back(Entity{EntityKind::Bullet, spawn, static_cast<int8_t>(dir)});
        if (spawn == s.avatar) {
            die(s);
            return;
        }
    }
}

}  // namespace

void dsolarfox_tick(GameState& s, Action action, const RulesetParams& params) {
    // A movement action steers; 180-degree reversals are ignored (classic
    // Solarfox). Noop keeps the current heading.
    if (is_movement(action)) {
        Direction d = action_direction(action);
        if (d != opposite(s.facing)) s.facing = d;
    }

    // The ship is always moving: exactly one tile per tick.
    Position t = moved(s.avatar, s.facing);
    if (!s.in_bounds(t)) {
        die(s);
        return;
    }
    s.avatar = t;
    if (s.entity_at(t, EntityKind::Wall) || s.entity_at(t, EntityKind::Turret) ||
        s.entity_at(t, EntityKind::Bullet)) {
        die(s);
        return;
    }
    if (auto gem = s.entity_at(t, EntityKind::Gem)) {
        s.remove_entity(*gem);
        s.score += score::kGem;
        if (s.count(EntityKind::Gem) == 0) {
            s.score += score::kWin;
            s.status = Status::Win;
            return;
        }
    }

    move_bullets(s);
    if (s.done()) return;

    if ((s.tick + 1) % params.fire_period == 0) {
        fire_turrets(s);
    }
}

}  // namespace egogrid
