#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egogrid/geometry.hpp"

namespace egogrid {

enum class GameId : uint8_t { SimpleZelda = 0, Zelda = 1, Boulderdash = 2, DSolarfox = 3 };

std::string to_string(GameId id);
GameId game_id_from_string(const std::string& name);

// ASCII tile map for one level. Rows are equal-length strings over the game's
// tile alphabet, exactly one 'A' avatar marker.
struct LevelSpec {
    GameId game = GameId::SimpleZelda;
    std::vector<std::string> rows;
    std::string name;

    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    char at(int r, int c) const { return rows[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    bool operator==(const LevelSpec& other) const {
        return game == other.game && rows == other.rows;
    }
};

enum class LevelRole : uint8_t { Train = 0, Test = 1 };

enum class Provenance : uint8_t { HumanDesigned = 0, Enumerated = 1, Generated = 2 };

struct LevelSet {
    LevelRole role = LevelRole::Train;
    std::vector<LevelSpec> levels;
    Provenance provenance = Provenance::HumanDesigned;
    uint64_t generator_seed = 0;  // meaningful when provenance == Generated

    size_t size() const { return levels.size(); }
};

// Parse one level from UTF-8 text (one symbol per tile, newline-separated
// rows). Throws ValidationError naming the offending row/col on ragged rows,
// unknown symbols, or avatar-count violations.
LevelSpec parse_level(const std::string& text, GameId game, const std::string& name = "");

// Canonical text form: rows joined by '\n' with a trailing newline.
std::string serialize_level(const LevelSpec& level);

// Avatar position; level must be valid.
Position avatar_cell(const LevelSpec& level);

// Horizontal mirror (columns reversed). Tile symbols are orientationless, so
// this is a pure string reversal per row.
LevelSpec mirror_level(const LevelSpec& level);

enum class Side : uint8_t { Left = 0, Right = 1 };

// All Simple Zelda levels with key and door on one side of the avatar.
// Interior is wall-free with a single wall ring around it; the avatar sits at
// the exact interior center and "side" means strict column inequality against
// the avatar's column. Ordered pairs of distinct cells, so a side region of n
// cells yields n*(n-1) levels; the default 7x11 interior gives 35 cells per
// side and 1190 levels.
LevelSet enumerate_simple_zelda(Side side, int interior_rows = 7, int interior_cols = 11);

// Constrained random generation for Boulderdash / Discrete Solarfox test
// levels: random placement plus a reachability check (diamond quota and exit
// for Boulderdash, every gem for Solarfox, both ignoring hazards).
// Deterministic in seed; levels are pairwise distinct and distinct from
// `exclude`. Throws Error if feasibility fails after bounded retries.
LevelSet generate_levels(GameId game, int count, uint64_t seed,
                         std::span<const LevelSpec> exclude = {});

// The bundled train/test split for each game:
//   SimpleZelda  -> left-enumerated train, right-enumerated test (1190/1190)
//   Zelda        -> 5 bundled train, 45 bundled test
//   Boulderdash  -> 5 bundled train, 50 generated test
//   DSolarfox    -> 5 bundled train, 50 generated test
struct SplitSets {
    LevelSet train;
    LevelSet test;
};
SplitSets builtin_sets(GameId game);

// Bundled human-designed levels only (train for all games, test for Zelda).
std::span<const char* const> bundled_level_texts(GameId game, LevelRole role);

// Level-set manifest: a small JSON file listing game id, role and the level
// file paths relative to the manifest location.
void write_level_set(const LevelSet& set, GameId game, const std::string& dir,
                     const std::string& manifest_name);
LevelSet read_level_set(const std::string& manifest_path);

}  // namespace egogrid
