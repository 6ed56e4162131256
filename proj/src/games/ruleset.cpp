#include "egogrid/games.hpp"

#include "egogrid/errors.hpp"

namespace egogrid {

std::string to_string(GameId id) {
    switch (id) {
        case GameId::SimpleZelda: return "simple_zelda";
        case GameId::Zelda: return "zelda";
        case GameId::Boulderdash: return "boulderdash";
        case GameId::DSolarfox: return "dsolarfox";
    }
    return "?";
}

GameId game_id_from_string(const std::string& name) {
    if (name == "simple_zelda") return GameId::SimpleZelda;
    if (name == "zelda") return GameId::Zelda;
    if (name == "boulderdash") return GameId::Boulderdash;
    if (name == "dsolarfox") return GameId::DSolarfox;
    throw ConfigError("unknown game id '" + name +
                      "' (expected simple_zelda, zelda, boulderdash or dsolarfox)");
}

const std::vector<Action>& Ruleset::action_set() const {
    static const std::vector<Action> kMoveOnly = {Action::Noop, Action::Up, Action::Right,
                                                  Action::Down, Action::Left};
    static const std::vector<Action> kWithUse = {Action::Noop, Action::Up,   Action::Right,
                                                 Action::Down, Action::Left, Action::Use};
    return game == GameId::Zelda ? kWithUse : kMoveOnly;
}

std::string Ruleset::tile_alphabet() const {
    switch (game) {
        case GameId::SimpleZelda: return "A.w+g";
        case GameId::Zelda: return "A.w+ge";
        case GameId::Boulderdash: return "A.-woxge";
        case GameId::DSolarfox: return "A.wxe";
    }
    return "";
}

std::optional<EntityKind> Ruleset::symbol_entity(char symbol) const {
    switch (symbol) {
        case 'A': return std::nullopt;  // avatar, handled by init_state
        case ' ': return std::nullopt;
        case '-': return std::nullopt;  // dug-out space (boulderdash)
        case '.':
            if (game == GameId::Boulderdash) return EntityKind::Dirt;
            return std::nullopt;  // floor
        case 'w': return EntityKind::Wall;
        case '+': return EntityKind::Key;
        case 'g':
            if (game == GameId::Boulderdash) return EntityKind::Exit;
            return EntityKind::Door;
        case 'e':
            if (game == GameId::DSolarfox) return EntityKind::Turret;
            return EntityKind::Enemy;
        case 'o': return EntityKind::Boulder;
        case 'x':
            if (game == GameId::DSolarfox) return EntityKind::Gem;
            return EntityKind::Diamond;
        default: return std::nullopt;
    }
}

char Ruleset::entity_symbol(EntityKind kind) const {
    switch (kind) {
        case EntityKind::Wall: return 'w';
        case EntityKind::Key: return '+';
        case EntityKind::Door: return 'g';
        case EntityKind::Exit: return 'g';
        case EntityKind::Enemy: return 'e';
        case EntityKind::Turret: return 'e';
        case EntityKind::Dirt: return '.';
        case EntityKind::Boulder: return 'o';
        case EntityKind::Diamond: return 'x';
        case EntityKind::Gem: return 'x';
        case EntityKind::Bullet: return '?';  // never appears in level files
    }
    return '?';
}

Ruleset ruleset_for(GameId game, RulesetParams params) {
    return Ruleset{game, params};
}

}  // namespace egogrid
