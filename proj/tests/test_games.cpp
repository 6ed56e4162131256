#include <doctest.h>

#include "egogrid/games.hpp"
#include "egogrid/levels.hpp"
#include "egogrid/rng.hpp"

using namespace egogrid;

namespace {

GameState from_text(const char* text, GameId game, uint64_t seed = 1) {
    return init_state(parse_level(text, game, "t"), seed, false);
}

// Step in a direction the avatar already faces (turn first if needed).
void walk(GameState& s, Direction d, const RulesetParams& params = {}) {
    if (s.facing != d) step(s, direction_action(d), params);
    step(s, direction_action(d), params);
}

bool win_predicate_satisfied(const GameState& s, int quota) {
    switch (s.game) {
        case GameId::SimpleZelda:
        case GameId::Zelda:
            return s.key_held && s.entity_at(s.avatar, EntityKind::Door).has_value();
        case GameId::Boulderdash:
            return s.diamonds_collected >= quota &&
                   s.entity_at(s.avatar, EntityKind::Exit).has_value();
        case GameId::DSolarfox:
            return s.count(EntityKind::Gem) == 0;
    }
    return false;
}

}  // namespace

TEST_SUITE("games") {

TEST_CASE("zelda: key pickup scores and sets the flag") {
    GameState s = from_text(
        "wwwww\n"
        "w+A.w\n"
        "w..gw\n"
        "wwwww\n",
        GameId::Zelda);
    walk(s, Direction::Left);
    CHECK(s.key_held);
    CHECK(s.score == doctest::Approx(score::kKeyPickup));
    CHECK(s.avatar == Position{1, 1});
}

TEST_CASE("zelda: door blocks without the key and wins with it") {
    GameState s = from_text(
        "wwwww\n"
        "w+A.w\n"
        "w.g.w\n"
        "wwwww\n",
        GameId::Zelda);
    walk(s, Direction::Down);  // door below-left is at (2,2); below avatar (1,2)->(2,2)
    CHECK(s.avatar == Position{1, 2});
    CHECK(s.status == Status::Running);

    walk(s, Direction::Left);  // key
    REQUIRE(s.key_held);
    walk(s, Direction::Down);  // (2,1)
    walk(s, Direction::Right);
    CHECK(s.status == Status::Win);
}

TEST_CASE("zelda: enemy contact loses") {
    // Slow enemies so only the avatar's move matters here.
    RulesetParams slow;
    slow.enemy_move_period = 1000;
    GameState s = from_text(
        "wwwww\n"
        "wAe+w\n"
        "w..gw\n"
        "wwwww\n",
        GameId::Zelda);
    step(s, Action::Right, slow);  // turn
    step(s, Action::Right, slow);  // step onto the enemy
    CHECK(s.status == Status::Loss);
}

TEST_CASE("zelda: boxed-in enemy must step onto the avatar") {
    GameState t = from_text(
        "wwww\n"
        "wA+w\n"
        "wewg\n"
        "wwww\n",
        GameId::Zelda);
    // Enemy (2,1): up = avatar (1,1); left/right/down walls. Noop lets it move.
    step(t, Action::Noop);
    CHECK(t.status == Status::Loss);
}

TEST_CASE("zelda: sword kills the enemy one tile ahead") {
    RulesetParams slow;
    slow.enemy_move_period = 1000;
    GameState s = from_text(
        "wwwww\n"
        "w.A.w\n"
        "w.e+w\n"
        "w..gw\n"
        "wwwww\n",
        GameId::Zelda);
    step(s, Action::Down, slow);  // face the enemy (turn only)
    CHECK(s.avatar == Position{1, 2});
    double before = s.score;
    step(s, Action::Use, slow);
    CHECK(s.count(EntityKind::Enemy) == 0);
    CHECK(s.score == doctest::Approx(before + score::kEnemyKilled));
    CHECK(s.status == Status::Running);
}

TEST_CASE("simple zelda has no use action and no enemies") {
    Ruleset rs = ruleset_for(GameId::SimpleZelda);
    CHECK(rs.action_set().size() == 5);
    for (Action a : rs.action_set()) CHECK(a != Action::Use);
    CHECK(ruleset_for(GameId::Zelda).action_set().size() == 6);

    // Use in simple zelda is a no-op tick.
    SplitSets sets = builtin_sets(GameId::SimpleZelda);
    GameState s = init_state(sets.train.levels[0], 3, false);
    std::string before = serialize_state(s);
    step(s, Action::Use);
    CHECK(s.tick == 1);
    CHECK(s.avatar == init_state(sets.train.levels[0], 3, false).avatar);
}

TEST_CASE("boulderdash: boulders fall into empty space") {
    GameState s = from_text(
        "wwwww\n"
        "w.o.w\n"
        "w.-.w\n"
        "w.-.w\n"
        "wA.gw\n"
        "wwwww\n",
        GameId::Boulderdash);
    REQUIRE(s.entity_at({1, 2}, EntityKind::Boulder).has_value());
    step(s, Action::Noop);
    CHECK(s.entity_at({2, 2}, EntityKind::Boulder).has_value());
    step(s, Action::Noop);
    CHECK(s.entity_at({3, 2}, EntityKind::Boulder).has_value());
    // (4,2) below is dirt, so the boulder comes to rest.
    step(s, Action::Noop);
    CHECK(s.entity_at({3, 2}, EntityKind::Boulder).has_value());
    CHECK(s.count(EntityKind::Boulder) == 1);
}

TEST_CASE("boulderdash: a falling boulder crushes the avatar, a resting one is safe") {
    // Standing directly under a resting boulder is safe.
    GameState safe = from_text(
        "wwww\n"
        "w.ow\n"
        "w.Aw\n"
        "w..w\n"
        "wwww\n",
        GameId::Boulderdash);
    for (int i = 0; i < 5; ++i) step(safe, Action::Noop);
    CHECK(safe.status == Status::Running);
    CHECK(safe.entity_at({1, 2}, EntityKind::Boulder).has_value());

    // Boulder already falling lands on the avatar.
    GameState s = from_text(
        "wwww\n"
        "w.ow\n"
        "w.-w\n"
        "w.-w\n"
        "wA.w\n"
        "wwww\n",
        GameId::Boulderdash);
    step(s, Action::Noop);  // boulder (1,2)->(2,2), falling
    REQUIRE(s.entity_at({2, 2}, EntityKind::Boulder).has_value());
    walk(s, Direction::Right);  // avatar (4,1)->(4,2)... two ticks: turn + move
    // During those ticks the boulder kept falling: (3,2) then onto (4,2).
    CHECK(s.status == Status::Loss);
}

TEST_CASE("boulderdash: exit opens at the diamond quota") {
    RulesetParams params;
    params.diamond_quota = 2;
    GameState s = from_text(
        "wwwwww\n"
        "wAxxgw\n"
        "wwwwww\n",
        GameId::Boulderdash);
    step(s, Action::Right, params);  // turn
    step(s, Action::Right, params);  // first diamond
    CHECK(s.diamonds_collected == 1);
    step(s, Action::Right, params);  // blocked? no: second diamond
    CHECK(s.diamonds_collected == 2);
    step(s, Action::Right, params);
    CHECK(s.status == Status::Win);

    // With quota 3 the exit blocks instead.
    GameState t = from_text(
        "wwwwww\n"
        "wAxxgw\n"
        "wwwwww\n",
        GameId::Boulderdash);
    RulesetParams strict;
    strict.diamond_quota = 3;
    step(t, Action::Right, strict);
    step(t, Action::Right, strict);
    step(t, Action::Right, strict);
    step(t, Action::Right, strict);
    CHECK(t.avatar == Position{1, 3});
    CHECK(t.status == Status::Running);
}

TEST_CASE("boulderdash: digging removes dirt") {
    GameState s = from_text(
        "wwww\n"
        "wA.w\n"
        "w.gw\n"
        "wwww\n",
        GameId::Boulderdash);
    int dirt_before = s.count(EntityKind::Dirt);
    walk(s, Direction::Right);
    CHECK(s.count(EntityKind::Dirt) == dirt_before - 1);
}

TEST_CASE("dsolarfox: noop keeps moving in the facing direction") {
    GameState s = from_text(
        "wwwwwww\n"
        "w.....w\n"
        "w.A.x.w\n"
        "w.....w\n"
        "wwwwwww\n",
        GameId::DSolarfox);
    step(s, Action::Right);
    CHECK(s.avatar == Position{2, 3});
    CHECK(s.facing == Direction::Right);
    step(s, Action::Noop);
    CHECK(s.avatar == Position{2, 4});
    CHECK(s.status == Status::Win);  // that was the last gem
}

TEST_CASE("dsolarfox: reversals are ignored") {
    GameState s = from_text(
        "wwwwwww\n"
        "w.....w\n"
        "w.A..xw\n"
        "w.....w\n"
        "wwwwwww\n",
        GameId::DSolarfox);
    step(s, Action::Right);
    step(s, Action::Left);  // ignored; still moving right
    CHECK(s.avatar == Position{2, 4});
    CHECK(s.facing == Direction::Right);
}

TEST_CASE("dsolarfox: hitting the border fence loses") {
    GameState s = from_text(
        "wwwww\n"
        "w.A.w\n"
        "w..xw\n"
        "wwwww\n",
        GameId::DSolarfox);
    step(s, Action::Up);
    CHECK(s.status == Status::Loss);
}

TEST_CASE("dsolarfox: avatar moves every tick while running") {
    SplitSets sets = builtin_sets(GameId::DSolarfox);
    GameState s = init_state(sets.train.levels[0], 11, false);
    SplitMix64 rng(5);
    for (int i = 0; i < 200 && !s.done(); ++i) {
        Position before = s.avatar;
        step(s, static_cast<Action>(rng.below(5)));
        if (!s.done()) CHECK(before != s.avatar);
    }
}

TEST_CASE("dsolarfox: turrets fire on the period and bullets kill") {
    RulesetParams params;
    params.fire_period = 3;
    GameState s = from_text(
        "wwwwwww\n"
        "w..e..w\n"
        "w.....w\n"
        "w.....w\n"
        "wA...xw\n"
        "wwwwwww\n",
        GameId::DSolarfox);
    // Circle in place-ish: keep moving right then left along the bottom.
    step(s, Action::Right, params);  // tick 1
    CHECK(s.count(EntityKind::Bullet) == 0);
    step(s, Action::Right, params);  // tick 2
    CHECK(s.count(EntityKind::Bullet) == 0);
    step(s, Action::Right, params);  // tick 3: fire
    CHECK(s.count(EntityKind::Bullet) == 1);
}

TEST_CASE("random rollouts never leave a satisfied win predicate running") {
    RulesetParams params;
    for (GameId game : {GameId::SimpleZelda, GameId::Zelda, GameId::Boulderdash,
                        GameId::DSolarfox}) {
        SplitSets sets = builtin_sets(game);
        SplitMix64 rng(777 + static_cast<uint64_t>(game));
        int steps_total = 0;
        int episode = 0;
        GameState s = init_state(sets.train.levels[0], rng.next(), true);
        int boulders = s.count(EntityKind::Boulder);
        while (steps_total < 10000) {
            if (s.done()) {
                episode += 1;
                s = init_state(sets.train.levels[episode % sets.train.levels.size()],
                               rng.next(), true);
                boulders = s.count(EntityKind::Boulder);
            }
            int n_actions = static_cast<int>(ruleset_for(game).action_set().size());
            Action a = ruleset_for(game).action_set()[rng.below(
                static_cast<uint32_t>(n_actions))];
            step(s, a, params);
            ++steps_total;
            REQUIRE(s.in_bounds(s.avatar));
            if (!s.done()) {
                REQUIRE(!win_predicate_satisfied(s, params.diamond_quota));
            }
            if (game == GameId::Boulderdash) {
                // Gravity conserves boulders.
                REQUIRE(s.count(EntityKind::Boulder) == boulders);
            }
        }
    }
}

}  // TEST_SUITE
