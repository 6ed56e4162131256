#pragma once

#include <functional>
#include <queue>
#include <vector>

#include "egogrid/geometry.hpp"

namespace egogrid {

inline constexpr int kUnreachable = -1;

// Plain 4-neighbor BFS over a tile grid. Returns the distance field from
// `start` (kUnreachable where not reachable). `passable` is consulted for
// every cell except `start`.
inline std::vector<int> grid_bfs(int height, int width, Position start,
                                 const std::function<bool(Position)>& passable) {
    std::vector<int> dist(static_cast<size_t>(height * width), kUnreachable);
    auto idx = [width](Position p) { return static_cast<size_t>(p.row * width + p.col); };
    std::queue<Position> q;
    dist[idx(start)] = 0;
    q.push(start);
    while (!q.empty()) {
        Position p = q.front();
        q.pop();
        for (int d = 0; d < kNumDirections; ++d) {
            Position t = moved(p, static_cast<Direction>(d));
            if (t.row < 0 || t.row >= height || t.col < 0 || t.col >= width) continue;
            if (dist[idx(t)] != kUnreachable) continue;
            if (!passable(t)) continue;
            dist[idx(t)] = dist[idx(p)] + 1;
            q.push(t);
        }
    }
    return dist;
}

// BFS over (position, heading) states for always-moving ships that may turn
// at most 90 degrees per tick (no reversals). Transition: pick the kept/left/
// right heading, then advance one tile; a state is valid when the landing
// cell is safe. Returns reachability over all (pos, heading) pairs, indexed
// pos*4+heading.
inline std::vector<bool> heading_bfs(int height, int width, Position start, Direction heading,
                                     const std::function<bool(Position)>& safe) {
    std::vector<bool> seen(static_cast<size_t>(height * width * 4), false);
    auto idx = [width](Position p, Direction d) {
        return static_cast<size_t>((p.row * width + p.col) * 4 + static_cast<int>(d));
    };
    std::queue<std::pair<Position, Direction>> q;
    seen[idx(start, heading)] = true;
    q.emplace(start, heading);
    while (!q.empty()) {
        auto [p, h] = q.front();
        q.pop();
        const Direction options[3] = {h, rotate_left(h), rotate_right(h)};
        for (Direction nh : options) {
            Position t = moved(p, nh);
            if (t.row < 0 || t.row >= height || t.col < 0 || t.col >= width) continue;
            if (!safe(t)) continue;
            if (seen[idx(t, nh)]) continue;
            seen[idx(t, nh)] = true;
            q.emplace(t, nh);
        }
    }
    return seen;
}

}  // namespace egogrid
