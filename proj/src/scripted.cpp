#include <queue>

#include "egogrid/policy.hpp"
#include "egogrid/transforms.hpp"

namespace egogrid {

void NetPolicy::act(const float* obs, int batch, size_t, const std::vector<const GameState*>&,
                    std::vector<int>& action_indices) {
    net_.forward(obs, batch, logits_, values_);
    const int n_actions = net_.config().n_actions;
    action_indices.resize(static_cast<size_t>(batch));
    for (int b = 0; b < batch; ++b) {
        action_indices[static_cast<size_t>(b)] = act_greedy(logits_, b * n_actions, n_actions);
    }
}

namespace {

// Movement actions sit at indices 1..4 of every game's action set, matching
// the Direction enum order.
int move_index(Direction d) { return static_cast<int>(d) + 1; }

Action simple_zelda_move(const GameState& s) {
    Position target{-1, -1};
    const EntityKind want = s.key_held ? EntityKind::Door : EntityKind::Key;
    for (const Entity& e : s.entities) {
        if (e.kind == want) target = e.pos;
    }
    if (target.row < 0) return Action::Noop;

    auto passable = [&s](Position p) {
        if (auto i = s.entity_at(p)) {
            EntityKind k = s.entities[*i].kind;
            if (k == EntityKind::Wall) return false;
            if (k == EntityKind::Door && !s.key_held) return false;
        }
        return true;
    };
    // Distance field from the target; then greedy descent from the avatar.
    std::vector<int> dist(static_cast<size_t>(s.height * s.width), -1);
    auto idx = [&s](Position p) { return static_cast<size_t>(p.row * s.width + p.col); };
    std::queue<Position> q;
    dist[idx(target)] = 0;
    q.push(target);
    while (!q.empty()) {
        Position p = q.front();
        q.pop();
        for (int d = 0; d < kNumDirections; ++d) {
            Position t = moved(p, static_cast<Direction>(d));
            if (!s.in_bounds(t) || dist[idx(t)] != -1 || !passable(t)) continue;
            dist[idx(t)] = dist[idx(p)] + 1;
            q.push(t);
        }
    }
    const int here = dist[idx(s.avatar)];
    if (here <= 0) return Action::Noop;

    // Vertical first; horizontal by the sign of the column gap. This makes
    // the policy commute with horizontal mirroring.
    Direction toward_col = target.col < s.avatar.col ? Direction::Left : Direction::Right;
    const Direction order[4] = {Direction::Up, Direction::Down, toward_col,
                                opposite(toward_col)};
    for (Direction d : order) {
        Position t = moved(s.avatar, d);
        if (s.in_bounds(t) && passable(t) && dist[idx(t)] == here - 1) {
            return direction_action(d);
        }
    }
    return Action::Noop;
}

Action solarfox_move(const GameState& s) {
    auto safe = [&s](Position p) {
        if (auto i = s.entity_at(p)) {
            EntityKind k = s.entities[*i].kind;
            if (k == EntityKind::Wall || k == EntityKind::Turret) return false;
        }
        return true;
    };
    struct Node {
        Position pos;
        Direction heading;
        Direction first;
    };
    std::vector<bool> seen(static_cast<size_t>(s.height * s.width * 4), false);
    auto idx = [&s](Position p, Direction d) {
        return static_cast<size_t>((p.row * s.width + p.col) * 4 + static_cast<int>(d));
    };
    std::queue<Node> q;
    seen[idx(s.avatar, s.facing)] = true;
    bool rooted = false;
    Direction root_first = s.facing;
    // Seed with the three possible first moves.
    const Direction first_opts[3] = {s.facing, rotate_left(s.facing), rotate_right(s.facing)};
    for (Direction h : first_opts) {
        Position t = moved(s.avatar, h);
        if (!s.in_bounds(t) || !safe(t)) continue;
        if (s.entity_at(t, EntityKind::Gem)) return direction_action(h);
        if (!seen[idx(t, h)]) {
            seen[idx(t, h)] = true;
            q.push({t, h, h});
        }
        if (!rooted) {
            root_first = h;  // fallback: any surviving move
            rooted = true;
        }
    }
    while (!q.empty()) {
        Node n = q.front();
        q.pop();
        const Direction options[3] = {n.heading, rotate_left(n.heading),
                                      rotate_right(n.heading)};
        for (Direction h : options) {
            Position t = moved(n.pos, h);
            if (!s.in_bounds(t) || !safe(t) || seen[idx(t, h)]) continue;
            if (s.entity_at(t, EntityKind::Gem)) return direction_action(n.first);
            seen[idx(t, h)] = true;
            q.push({t, h, n.first});
        }
    }
    return direction_action(root_first);
}

}  // namespace

void ScriptedSimpleZelda::act(const float*, int batch, size_t,
                              const std::vector<const GameState*>& states,
                              std::vector<int>& action_indices) {
    action_indices.resize(static_cast<size_t>(batch));
    for (int b = 0; b < batch; ++b) {
        Action a = simple_zelda_move(*states[static_cast<size_t>(b)]);
        action_indices[static_cast<size_t>(b)] =
            is_movement(a) ? move_index(action_direction(a)) : 0;
    }
}

void ScriptedSolarfox::act(const float*, int batch, size_t,
                           const std::vector<const GameState*>& states,
                           std::vector<int>& action_indices) {
    action_indices.resize(static_cast<size_t>(batch));
    for (int b = 0; b < batch; ++b) {
        Action a = solarfox_move(*states[static_cast<size_t>(b)]);
        action_indices[static_cast<size_t>(b)] =
            is_movement(a) ? move_index(action_direction(a)) : 0;
    }
}

}  // namespace egogrid
