#include <algorithm>

#include "egogrid/errors.hpp"
#include "egogrid/games.hpp"
#include "egogrid/levels.hpp"

namespace egogrid {

LevelSpec parse_level(const std::string& text, GameId game, const std::string& name) {
    if (text.empty()) {
        throw ValidationError("level '" + name + "': empty text");
    }
    LevelSpec level;
    level.game = game;
    level.name = name;

    std::string row;
    std::vector<std::string> rows;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            if (!row.empty() && row.back() == '\r') row.pop_back();
            if (!(i == text.size() && row.empty())) rows.push_back(row);
            row.clear();
        } else {
            row.push_back(text[i]);
        }
    }
    if (rows.empty() || rows[0].empty()) {
        throw ValidationError("level '" + name + "': no rows");
    }
    level.rows = std::move(rows);

    const size_t width = level.rows[0].size();
    for (size_t r = 0; r < level.rows.size(); ++r) {
        if (level.rows[r].size() != width) {
            throw ValidationError("level '" + name + "': row " + std::to_string(r) +
                                  " has width " + std::to_string(level.rows[r].size()) +
                                  ", expected " + std::to_string(width));
        }
    }

    Ruleset rules = ruleset_for(game);
    const std::string alphabet = rules.tile_alphabet();
    int avatars = 0;
    Position first_avatar{0, 0};
    for (int r = 0; r < level.height(); ++r) {
        for (int c = 0; c < level.width(); ++c) {
            char sym = level.at(r, c);
            if (alphabet.find(sym) == std::string::npos && sym != '-' && sym != ' ') {
                throw ValidationError("level '" + name + "': unknown symbol '" +
                                      std::string(1, sym) + "' for game " + to_string(game) +
                                      " at row " + std::to_string(r) + ", col " +
                                      std::to_string(c));
            }
            if (sym == 'A') {
                if (++avatars > 1) {
                    throw ValidationError("level '" + name + "': second avatar at row " +
                                          std::to_string(r) + ", col " + std::to_string(c) +
                                          " (first at row " + std::to_string(first_avatar.row) +
                                          ", col " + std::to_string(first_avatar.col) + ")");
                }
                first_avatar = {r, c};
            }
        }
    }
    if (avatars == 0) {
        throw ValidationError("level '" + name + "': no avatar marker");
    }
    return level;
}

std::string serialize_level(const LevelSpec& level) {
    std::string out;
    for (const std::string& row : level.rows) {
        out += row;
        out += '\n';
    }
    return out;
}

Position avatar_cell(const LevelSpec& level) {
    for (int r = 0; r < level.height(); ++r) {
        for (int c = 0; c < level.width(); ++c) {
            if (level.at(r, c) == 'A') return {r, c};
        }
    }
    throw ValidationError("level '" + level.name + "': no avatar marker");
}

LevelSpec mirror_level(const LevelSpec& level) {
    LevelSpec out = level;
    out.name = level.name + "_mirror";
    for (std::string& row : out.rows) {
        std::reverse(row.begin(), row.end());
    }
    return out;
}

}  // namespace egogrid
