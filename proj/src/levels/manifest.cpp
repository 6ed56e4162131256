#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "egogrid/errors.hpp"
#include "egogrid/levels.hpp"

namespace egogrid {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string role_name(LevelRole role) {
    return role == LevelRole::Train ? "train" : "test";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::HumanDesigned: return "human";
        case Provenance::Enumerated: return "enumerated";
        case Provenance::Generated: return "generated";
    }
    return "?";
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

void write_level_set(const LevelSet& set, GameId game, const std::string& dir,
                     const std::string& manifest_name) {
    fs::path base(dir);
    std::error_code ec;
    fs::create_directories(base, ec);
    json manifest;
    manifest["game"] = to_string(game);
    manifest["role"] = role_name(set.role);
    manifest["provenance"] = provenance_name(set.provenance);
    if (set.provenance == Provenance::Generated) {
        manifest["generator_seed"] = set.generator_seed;
    }
    json files = json::array();
    for (const LevelSpec& level : set.levels) {
        std::string file = level.name.empty()
                               ? "level_" + std::to_string(files.size()) + ".txt"
                               : level.name + ".txt";
        std::ofstream out(base / file, std::ios::binary);
        if (!out) throw IoError("cannot write " + (base / file).string());
        out << serialize_level(level);
        files.push_back(file);
    }
    manifest["levels"] = files;
    std::ofstream out(base / manifest_name, std::ios::binary);
    if (!out) throw IoError("cannot write " + (base / manifest_name).string());
    out << manifest.dump(2) << "\n";
}

LevelSet read_level_set(const std::string& manifest_path) {
    fs::path path(manifest_path);
    json manifest;
    try {
        manifest = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw IoError("bad manifest " + manifest_path + ": " + e.what());
    }
    LevelSet set;
    GameId game = game_id_from_string(manifest.at("game").get<std::string>());
    std::string role = manifest.at("role").get<std::string>();
    if (role != "train" && role != "test") {
        throw IoError("bad manifest role '" + role + "' in " + manifest_path);
    }
    set.role = role == "train" ? LevelRole::Train : LevelRole::Test;
    std::string prov = manifest.value("provenance", "human");
    set.provenance = prov == "enumerated"  ? Provenance::Enumerated
                     : prov == "generated" ? Provenance::Generated
                                           : Provenance::HumanDesigned;
    set.generator_seed = manifest.value("generator_seed", 0ull);
    fs::path base = path.parent_path();
    for (const auto& file : manifest.at("levels")) {
        fs::path level_path = base / file.get<std::string>();
        std::string name = level_path.stem().string();
        set.levels.push_back(parse_level(read_file(level_path), game, name));
    }
    if (set.levels.empty()) {
        throw IoError("manifest " + manifest_path + " lists no levels");
    }
    return set;
}

}  // namespace egogrid
