#include <cstdio>
#include <set>

#include "egogrid/errors.hpp"
#include "egogrid/levels.hpp"
#include "egogrid/pathfind.hpp"
#include "egogrid/rng.hpp"

namespace egogrid {

namespace {

constexpr int kGenHeight = 9;
constexpr int kGenWidth = 13;
constexpr int kGenAttempts = 500;

std::vector<Position> interior_cells() {
    std::vector<Position> cells;
    for (int r = 1; r < kGenHeight - 1; ++r) {
        for (int c = 1; c < kGenWidth - 1; ++c) {
            cells.push_back({r, c});
        }
    }
    return cells;
}

void shuffle(std::vector<Position>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.below(static_cast<uint32_t>(i))]);
    }
}

std::vector<std::string> bordered_grid(char interior) {
    std::vector<std::string> rows(kGenHeight);
    for (int r = 0; r < kGenHeight; ++r) {
        bool border = r == 0 || r == kGenHeight - 1;
        rows[static_cast<size_t>(r)] =
            border ? std::string(kGenWidth, 'w')
                   : "w" + std::string(kGenWidth - 2, interior) + "w";
    }
    return rows;
}

char cell(const std::vector<std::string>& rows, Position p) {
    return rows[static_cast<size_t>(p.row)][static_cast<size_t>(p.col)];
}

void put(std::vector<std::string>& rows, Position p, char sym) {
    rows[static_cast<size_t>(p.row)][static_cast<size_t>(p.col)] = sym;
}

int manhattan(Position a, Position b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

// Dirt-filled cave with sparse walls and boulders, >= quota reachable
// diamonds and a reachable exit (reachability on the static grid, hazards
// ignored; boulders and the shut exit block).
bool try_boulderdash(SplitMix64& rng, std::vector<std::string>& rows) {
    rows = bordered_grid('.');
    std::vector<Position> cells = interior_cells();
    shuffle(cells, rng);
    size_t at = 0;
    auto take = [&]() { return cells[at++]; };

    Position avatar = take();
    put(rows, avatar, 'A');
    Position exit_pos = take();
    put(rows, exit_pos, 'g');
    const int n_diamonds = 13, n_boulders = 6, n_walls = 5, n_enemies = 2;
    std::vector<Position> diamonds;
    for (int i = 0; i < n_diamonds; ++i) {
        diamonds.push_back(take());
        put(rows, diamonds.back(), 'x');
    }
    for (int i = 0; i < n_boulders; ++i) put(rows, take(), 'o');
    for (int i = 0; i < n_walls; ++i) put(rows, take(), 'w');
    int placed_enemies = 0;
    while (placed_enemies < n_enemies && at < cells.size()) {
        Position p = take();
        if (manhattan(p, avatar) < 5) continue;
        put(rows, p, 'e');
        // Dug-out pocket so the enemy can roam.
        for (int d = 0; d < kNumDirections; ++d) {
            Position n = moved(p, static_cast<Direction>(d));
            if (cell(rows, n) == '.') put(rows, n, '-');
        }
        ++placed_enemies;
    }
    if (placed_enemies < n_enemies) return false;

    auto passable = [&rows](Position p) {
        char s = cell(rows, p);
        return s == '.' || s == '-' || s == 'x' || s == 'e';
    };
    std::vector<int> dist = grid_bfs(kGenHeight, kGenWidth, avatar, passable);
    auto reached = [&](Position p) {
        return dist[static_cast<size_t>(p.row * kGenWidth + p.col)] != kUnreachable;
    };
    int reachable_diamonds = 0;
    for (Position d : diamonds) {
        if (reached(d)) ++reachable_diamonds;
    }
    if (reachable_diamonds < 10) return false;
    bool exit_ok = false;
    for (int d = 0; d < kNumDirections; ++d) {
        Position n = moved(exit_pos, static_cast<Direction>(d));
        if (n.row >= 0 && n.row < kGenHeight && n.col >= 0 && n.col < kGenWidth &&
            passable(n) && reached(n)) {
            exit_ok = true;
        }
    }
    return exit_ok;
}

// Open arena ringed by a lethal fence. Every gem must be reachable by the
// always-moving ship from any initial heading (bullets ignored).
bool try_dsolarfox(SplitMix64& rng, std::vector<std::string>& rows) {
    rows = bordered_grid('.');
    std::vector<Position> cells;
    for (Position p : interior_cells()) cells.push_back(p);
    shuffle(cells, rng);
    size_t at = 0;
    auto take = [&]() { return cells[at++]; };

    Position avatar{0, 0};
    bool found = false;
    while (at < cells.size()) {
        Position p = take();
        int fence_dist = std::min(std::min(p.row, kGenHeight - 1 - p.row),
                                  std::min(p.col, kGenWidth - 1 - p.col));
        if (fence_dist >= 2) {
            avatar = p;
            found = true;
            break;
        }
    }
    if (!found) return false;
    put(rows, avatar, 'A');

    const int n_gems = 8, n_turrets = 2;
    std::vector<Position> gems;
    for (int i = 0; i < n_gems; ++i) {
        if (at >= cells.size()) return false;
        gems.push_back(take());
        put(rows, gems.back(), 'x');
    }
    int placed = 0;
    while (placed < n_turrets && at < cells.size()) {
        Position p = take();
        if (manhattan(p, avatar) < 4) continue;
        put(rows, p, 'e');
        ++placed;
    }
    if (placed < n_turrets) return false;

    auto safe = [&rows](Position p) {
        char s = cell(rows, p);
        return s != 'w' && s != 'e';
    };
    for (int h = 0; h < kNumDirections; ++h) {
        // First forced move happens immediately, so the start state must
        // already survive it.
        Position first = moved(avatar, static_cast<Direction>(h));
        if (!safe(first)) return false;
        std::vector<bool> seen =
            heading_bfs(kGenHeight, kGenWidth, avatar, static_cast<Direction>(h), safe);
        for (Position g : gems) {
            bool ok = false;
            for (int d = 0; d < 4; ++d) {
                if (seen[static_cast<size_t>((g.row * kGenWidth + g.col) * 4 + d)]) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace

LevelSet generate_levels(GameId game, int count, uint64_t seed,
                         std::span<const LevelSpec> exclude) {
    if (game != GameId::Boulderdash && game != GameId::DSolarfox) {
        throw ConfigError("level generation supports boulderdash and dsolarfox only, got " +
                          to_string(game));
    }
    LevelSet set;
    set.role = LevelRole::Test;
    set.provenance = Provenance::Generated;
    set.generator_seed = seed;

    std::set<std::string> taken;
    for (const LevelSpec& lvl : exclude) {
        taken.insert(serialize_level(lvl));
    }

    const char* prefix = game == GameId::Boulderdash ? "gen_bd" : "gen_sf";
    for (int i = 0; i < count; ++i) {
        bool done = false;
        for (int attempt = 0; attempt < kGenAttempts && !done; ++attempt) {
            SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(i),
                                    static_cast<uint64_t>(attempt)));
            std::vector<std::string> rows;
            bool ok = game == GameId::Boulderdash ? try_boulderdash(rng, rows)
                                                  : try_dsolarfox(rng, rows);
            if (!ok) continue;
            LevelSpec level;
            level.game = game;
            level.rows = std::move(rows);
            char name[32];
            std::snprintf(name, sizeof(name), "%s_%02d", prefix, i);
            level.name = name;
            std::string key = serialize_level(level);
            if (taken.count(key)) continue;
            taken.insert(key);
            set.levels.push_back(std::move(level));
            done = true;
        }
        if (!done) {
            throw Error("level generation failed for " + to_string(game) + " level " +
                        std::to_string(i) + " after " + std::to_string(kGenAttempts) +
                        " attempts (seed " + std::to_string(seed) + ")");
        }
    }
    return set;
}

}  // namespace egogrid
