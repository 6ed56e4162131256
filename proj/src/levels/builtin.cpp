#include <cstdio>

#include "egogrid/errors.hpp"
#include "egogrid/levels.hpp"

namespace egogrid {

namespace builtin {
extern const char* const kZeldaTrain[];
extern const int kZeldaTrainCount;
extern const char* const kBoulderdashTrain[];
extern const int kBoulderdashTrainCount;
extern const char* const kDSolarfoxTrain[];
extern const int kDSolarfoxTrainCount;
extern const char* const kZeldaTest[];
extern const int kZeldaTestCount;
}  // namespace builtin

namespace {

// Generated test sets are frozen by this seed; regenerating with the same
// build reproduces them byte for byte.
constexpr uint64_t kBuiltinTestSeed = 2020;

LevelSet bundled(GameId game, LevelRole role, const char* const* texts, int count,
                 const char* prefix) {
    LevelSet set;
    set.role = role;
    set.provenance = Provenance::HumanDesigned;
    for (int i = 0; i < count; ++i) {
        char name[48];
        std::snprintf(name, sizeof(name), "%s_%02d", prefix, i);
        set.levels.push_back(parse_level(texts[i], game, name));
    }
    return set;
}

}  // namespace

std::span<const char* const> bundled_level_texts(GameId game, LevelRole role) {
    using namespace builtin;
    if (role == LevelRole::Train) {
        switch (game) {
            case GameId::Zelda:
                return {kZeldaTrain, static_cast<size_t>(kZeldaTrainCount)};
            case GameId::Boulderdash:
                return {kBoulderdashTrain, static_cast<size_t>(kBoulderdashTrainCount)};
            case GameId::DSolarfox:
                return {kDSolarfoxTrain, static_cast<size_t>(kDSolarfoxTrainCount)};
            case GameId::SimpleZelda:
                return {};
        }
    }
    if (game == GameId::Zelda) {
        return {kZeldaTest, static_cast<size_t>(kZeldaTestCount)};
    }
    return {};
}

SplitSets builtin_sets(GameId game) {
    SplitSets out;
    switch (game) {
        case GameId::SimpleZelda:
            out.train = enumerate_simple_zelda(Side::Left);
            out.test = enumerate_simple_zelda(Side::Right);
            return out;
        case GameId::Zelda:
            out.train = bundled(game, LevelRole::Train, builtin::kZeldaTrain,
                                builtin::kZeldaTrainCount, "z_train");
            out.test = bundled(game, LevelRole::Test, builtin::kZeldaTest,
                               builtin::kZeldaTestCount, "z_test");
            return out;
        case GameId::Boulderdash:
            out.train = bundled(game, LevelRole::Train, builtin::kBoulderdashTrain,
                                builtin::kBoulderdashTrainCount, "bd_train");
            out.test = generate_levels(game, 50, kBuiltinTestSeed, out.train.levels);
            return out;
        case GameId::DSolarfox:
            out.train = bundled(game, LevelRole::Train, builtin::kDSolarfoxTrain,
                                builtin::kDSolarfoxTrainCount, "sf_train");
            out.test = generate_levels(game, 50, kBuiltinTestSeed, out.train.levels);
            return out;
    }
    throw ConfigError("unknown game id");
}

}  // namespace egogrid
