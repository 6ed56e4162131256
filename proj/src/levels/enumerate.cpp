#include <cstdio>

#include "egogrid/errors.hpp"
#include "egogrid/levels.hpp"

namespace egogrid {

LevelSet enumerate_simple_zelda(Side side, int interior_rows, int interior_cols) {
    if (interior_rows < 1 || interior_cols < 3 || interior_rows % 2 == 0 ||
        interior_cols % 2 == 0) {
        throw ConfigError("simple zelda interior must be odd-dimensioned, cols >= 3 (got " +
                          std::to_string(interior_rows) + "x" + std::to_string(interior_cols) +
                          ")");
    }
    // Grid = interior plus one wall ring. The avatar sits at the exact interior
    // center; a side is every column strictly left/right of the avatar's.
    const int height = interior_rows + 2;
    const int width = interior_cols + 2;
    const int avatar_row = 1 + interior_rows / 2;
    const int avatar_col = 1 + interior_cols / 2;

    std::vector<std::string> base(static_cast<size_t>(height));
    for (int r = 0; r < height; ++r) {
        bool border_row = r == 0 || r == height - 1;
        base[static_cast<size_t>(r)] =
            border_row ? std::string(static_cast<size_t>(width), 'w')
                       : "w" + std::string(static_cast<size_t>(width - 2), '.') + "w";
    }
    base[static_cast<size_t>(avatar_row)][static_cast<size_t>(avatar_col)] = 'A';

    std::vector<Position> cells;
    for (int r = 1; r <= interior_rows; ++r) {
        for (int c = 1; c <= interior_cols; ++c) {
            bool on_side = side == Side::Left ? c < avatar_col : c > avatar_col;
            if (on_side) cells.push_back({r, c});
        }
    }

    LevelSet set;
    set.role = side == Side::Left ? LevelRole::Train : LevelRole::Test;
    set.provenance = Provenance::Enumerated;
    const char* side_name = side == Side::Left ? "left" : "right";
    set.levels.reserve(cells.size() * (cells.size() - 1));
    int index = 0;
    for (Position key : cells) {
        for (Position door : cells) {
            if (key == door) continue;
            LevelSpec level;
            level.game = GameId::SimpleZelda;
            level.rows = base;
            level.rows[static_cast<size_t>(key.row)][static_cast<size_t>(key.col)] = '+';
            level.rows[static_cast<size_t>(door.row)][static_cast<size_t>(door.col)] = 'g';
            char name[48];
            std::snprintf(name, sizeof(name), "sz_%s_%04d", side_name, index);
            level.name = name;
            set.levels.push_back(std::move(level));
            ++index;
        }
    }
    return set;
}

}  // namespace egogrid
