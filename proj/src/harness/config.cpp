#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "egogrid/errors.hpp"
#include "egogrid/harness.hpp"

namespace egogrid {

using nlohmann::json;

namespace {

AvatarMode avatar_mode_from_string(const std::string& s) {
    if (s == "original") return AvatarMode::Original;
    if (s == "replace_avatar") return AvatarMode::ReplaceAvatar;
    if (s == "replace_all") return AvatarMode::ReplaceAll;
    throw ConfigError("unknown avatar_mode '" + s +
                      "' (original, replace_avatar, replace_all)");
}

std::string avatar_mode_name(AvatarMode m) {
    switch (m) {
        case AvatarMode::Original: return "original";
        case AvatarMode::ReplaceAvatar: return "replace_avatar";
        case AvatarMode::ReplaceAll: return "replace_all";
    }
    return "?";
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) {
            if (it.key() == k) ok = true;
        }
        if (!ok) throw ConfigError("unknown config key '" + where + it.key() + "'");
    }
}

}  // namespace

std::string ExperimentConfig::default_run_name() const {
    std::string name = to_string(game) + "_c" + std::to_string(transform.crop ? 1 : 0) + "t" +
                       std::to_string(transform.translate ? 1 : 0) + "r" +
                       std::to_string(transform.rotate ? 1 : 0);
    if (render.avatar_mode == AvatarMode::Original) name += "_orig";
    if (render.avatar_mode == AvatarMode::ReplaceAll) name += "_all";
    return name;
}

NetConfig ExperimentConfig::net_config() const {
    NetConfig net;
    net.in_channels = frame_stack * (render.color == ColorMode::Gray ? 1 : 3);
    net.in_h = render.out_height;
    net.in_w = render.out_width;
    net.conv_channels = conv_channels;
    net.conv_kernels = conv_kernels;
    net.conv_strides = conv_strides;
    net.fc_width = fc_width;
    net.n_actions = static_cast<int>(ruleset_for(game).action_set().size());
    return net;
}

EnvConfig ExperimentConfig::env_config() const {
    EnvConfig env;
    env.game = game;
    env.rules = rules;
    env.render = render;
    env.transform = transform;
    env.frame_stack = frame_stack;
    env.episode_cap = episode_cap;
    env.random_facing = random_facing;
    return env;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    check_keys(j, "",
               {"game", "levels", "rules", "transform", "render", "agent", "net", "train",
                "eval", "results_dir", "run_name", "log_interval"});

    if (j.contains("game")) cfg.game = game_id_from_string(j["game"].get<std::string>());
    if (j.contains("levels")) {
        const json& l = j["levels"];
        check_keys(l, "levels.",
                   {"source", "train_manifest", "test_manifest", "sz_interior_rows",
                    "sz_interior_cols"});
        cfg.level_source = l.value("source", cfg.level_source);
        if (cfg.level_source != "builtin" && cfg.level_source != "manifest") {
            throw ConfigError("levels.source must be 'builtin' or 'manifest'");
        }
        cfg.train_manifest = l.value("train_manifest", cfg.train_manifest);
        cfg.test_manifest = l.value("test_manifest", cfg.test_manifest);
        cfg.sz_interior_rows = l.value("sz_interior_rows", cfg.sz_interior_rows);
        cfg.sz_interior_cols = l.value("sz_interior_cols", cfg.sz_interior_cols);
    }
    if (j.contains("rules")) {
        const json& r = j["rules"];
        check_keys(r, "rules.", {"enemy_move_period", "fire_period", "diamond_quota"});
        cfg.rules.enemy_move_period = r.value("enemy_move_period", cfg.rules.enemy_move_period);
        cfg.rules.fire_period = r.value("fire_period", cfg.rules.fire_period);
        cfg.rules.diamond_quota = r.value("diamond_quota", cfg.rules.diamond_quota);
    }
    if (j.contains("transform")) {
        const json& t = j["transform"];
        check_keys(t, "transform.", {"crop", "translate", "rotate", "crop_size"});
        cfg.transform.crop = t.value("crop", cfg.transform.crop);
        cfg.transform.translate = t.value("translate", cfg.transform.translate);
        cfg.transform.rotate = t.value("rotate", cfg.transform.rotate);
        cfg.transform.crop_size = t.value("crop_size", cfg.transform.crop_size);
        cfg.transform.validate();
    }
    if (j.contains("render")) {
        const json& r = j["render"];
        check_keys(r, "render.", {"tile_size", "avatar_mode", "resolution", "color"});
        cfg.render.tile_size = r.value("tile_size", cfg.render.tile_size);
        if (r.contains("avatar_mode")) {
            cfg.render.avatar_mode = avatar_mode_from_string(r["avatar_mode"]);
        }
        if (r.contains("resolution")) {
            auto res = r["resolution"].get<std::vector<int>>();
            if (res.size() != 2) throw ConfigError("render.resolution must be [H, W]");
            cfg.render.out_height = res[0];
            cfg.render.out_width = res[1];
        }
        if (r.contains("color")) {
            std::string c = r["color"].get<std::string>();
            if (c != "rgb" && c != "gray") throw ConfigError("render.color must be rgb|gray");
            cfg.render.color = c == "gray" ? ColorMode::Gray : ColorMode::RGB;
        }
        if (cfg.render.out_height < 8 || cfg.render.out_width < 8) {
            throw ConfigError("render.resolution must be at least 8x8");
        }
    }
    if (j.contains("agent")) {
        const json& a = j["agent"];
        check_keys(a, "agent.",
                   {"lr", "gamma", "value_coef", "entropy_coef", "max_grad_norm",
                    "rmsprop_decay", "rmsprop_eps", "n_steps", "workers"});
        cfg.agent.lr = a.value("lr", cfg.agent.lr);
        cfg.agent.gamma = a.value("gamma", cfg.agent.gamma);
        cfg.agent.value_coef = a.value("value_coef", cfg.agent.value_coef);
        cfg.agent.entropy_coef = a.value("entropy_coef", cfg.agent.entropy_coef);
        cfg.agent.max_grad_norm = a.value("max_grad_norm", cfg.agent.max_grad_norm);
        cfg.agent.rmsprop_decay = a.value("rmsprop_decay", cfg.agent.rmsprop_decay);
        cfg.agent.rmsprop_eps = a.value("rmsprop_eps", cfg.agent.rmsprop_eps);
        cfg.agent.n_steps = a.value("n_steps", cfg.agent.n_steps);
        cfg.agent.workers = a.value("workers", cfg.agent.workers);
        if (cfg.agent.n_steps < 1 || cfg.agent.workers < 1) {
            throw ConfigError("agent.n_steps and agent.workers must be >= 1");
        }
    }
    if (j.contains("net")) {
        const json& n = j["net"];
        check_keys(n, "net.", {"conv_channels", "conv_kernels", "conv_strides", "fc_width"});
        auto arr3 = [](const json& v, const char* name) {
            auto a = v.get<std::vector<int>>();
            if (a.size() != 3) throw ConfigError(std::string(name) + " must have 3 entries");
            return std::array<int, 3>{a[0], a[1], a[2]};
        };
        if (n.contains("conv_channels"))
            cfg.conv_channels = arr3(n["conv_channels"], "net.conv_channels");
        if (n.contains("conv_kernels"))
            cfg.conv_kernels = arr3(n["conv_kernels"], "net.conv_kernels");
        if (n.contains("conv_strides"))
            cfg.conv_strides = arr3(n["conv_strides"], "net.conv_strides");
        cfg.fc_width = n.value("fc_width", cfg.fc_width);
    }
    if (j.contains("train")) {
        const json& t = j["train"];
        check_keys(t, "train.",
                   {"total_frames", "episode_cap", "frame_stack", "random_facing", "seeds",
                    "early_stop"});
        cfg.total_frames = t.value("total_frames", cfg.total_frames);
        cfg.episode_cap = t.value("episode_cap", cfg.episode_cap);
        cfg.frame_stack = t.value("frame_stack", cfg.frame_stack);
        cfg.random_facing = t.value("random_facing", cfg.random_facing);
        if (t.contains("seeds")) cfg.seeds = t["seeds"].get<std::vector<uint64_t>>();
        if (cfg.seeds.empty()) throw ConfigError("train.seeds must be non-empty");
        if (cfg.total_frames == 0) throw ConfigError("train.total_frames must be > 0");
        if (t.contains("early_stop")) {
            const json& e = t["early_stop"];
            check_keys(e, "train.early_stop.",
                       {"enabled", "win_threshold", "window", "checks", "interval_updates"});
            cfg.early_stop.enabled = e.value("enabled", cfg.early_stop.enabled);
            cfg.early_stop.win_threshold =
                e.value("win_threshold", cfg.early_stop.win_threshold);
            cfg.early_stop.window = e.value("window", cfg.early_stop.window);
            cfg.early_stop.checks = e.value("checks", cfg.early_stop.checks);
            cfg.early_stop.interval_updates =
                e.value("interval_updates", cfg.early_stop.interval_updates);
        }
    }
    if (j.contains("eval")) {
        const json& e = j["eval"];
        check_keys(e, "eval.", {"episodes_per_level", "seed", "episode_cap"});
        cfg.eval_episodes = e.value("episodes_per_level", cfg.eval_episodes);
        cfg.eval_seed = e.value("seed", cfg.eval_seed);
        cfg.eval_episode_cap = e.value("episode_cap", cfg.eval_episode_cap);
    }
    cfg.results_dir = j.value("results_dir", cfg.results_dir);
    cfg.run_name = j.value("run_name", cfg.run_name);
    cfg.log_interval = j.value("log_interval", cfg.log_interval);
    return cfg;
}

std::string experiment_config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["game"] = to_string(cfg.game);
    j["levels"] = {{"source", cfg.level_source},
                   {"sz_interior_rows", cfg.sz_interior_rows},
                   {"sz_interior_cols", cfg.sz_interior_cols}};
    if (!cfg.train_manifest.empty()) j["levels"]["train_manifest"] = cfg.train_manifest;
    if (!cfg.test_manifest.empty()) j["levels"]["test_manifest"] = cfg.test_manifest;
    j["rules"] = {{"enemy_move_period", cfg.rules.enemy_move_period},
                  {"fire_period", cfg.rules.fire_period},
                  {"diamond_quota", cfg.rules.diamond_quota}};
    j["transform"] = {{"crop", cfg.transform.crop},
                      {"translate", cfg.transform.translate},
                      {"rotate", cfg.transform.rotate},
                      {"crop_size", cfg.transform.crop_size}};
    j["render"] = {{"tile_size", cfg.render.tile_size},
                   {"avatar_mode", avatar_mode_name(cfg.render.avatar_mode)},
                   {"resolution", {cfg.render.out_height, cfg.render.out_width}},
                   {"color", cfg.render.color == ColorMode::Gray ? "gray" : "rgb"}};
    j["agent"] = {{"lr", cfg.agent.lr},
                  {"gamma", cfg.agent.gamma},
                  {"value_coef", cfg.agent.value_coef},
                  {"entropy_coef", cfg.agent.entropy_coef},
                  {"max_grad_norm", cfg.agent.max_grad_norm},
                  {"rmsprop_decay", cfg.agent.rmsprop_decay},
                  {"rmsprop_eps", cfg.agent.rmsprop_eps},
                  {"n_steps", cfg.agent.n_steps},
                  {"workers", cfg.agent.workers}};
    j["net"] = {{"conv_channels", cfg.conv_channels},
                {"conv_kernels", cfg.conv_kernels},
                {"conv_strides", cfg.conv_strides},
                {"fc_width", cfg.fc_width}};
    j["train"] = {{"total_frames", cfg.total_frames},
                  {"episode_cap", cfg.episode_cap},
                  {"frame_stack", cfg.frame_stack},
                  {"random_facing", cfg.random_facing},
                  {"seeds", cfg.seeds},
                  {"early_stop",
                   {{"enabled", cfg.early_stop.enabled},
                    {"win_threshold", cfg.early_stop.win_threshold},
                    {"window", cfg.early_stop.window},
                    {"checks", cfg.early_stop.checks},
                    {"interval_updates", cfg.early_stop.interval_updates}}}};
    j["eval"] = {{"episodes_per_level", cfg.eval_episodes},
                 {"seed", cfg.eval_seed},
                 {"episode_cap", cfg.eval_episode_cap}};
    j["results_dir"] = cfg.results_dir;
    if (!cfg.run_name.empty()) j["run_name"] = cfg.run_name;
    j["log_interval"] = cfg.log_interval;
    return j.dump(2) + "\n";
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config " + path);
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    return experiment_config_from_json(text);
}

std::string resolve_results_dir(const ExperimentConfig& cfg) {
    if (const char* env = std::getenv("EGOGRID_RESULTS_DIR"); env && *env) {
        return env;
    }
    return cfg.results_dir;
}

SplitSets resolve_levels(const ExperimentConfig& cfg) {
    if (cfg.level_source == "manifest") {
        if (cfg.train_manifest.empty() || cfg.test_manifest.empty()) {
            throw ConfigError("levels.source=manifest needs train_manifest and test_manifest");
        }
        SplitSets out;
        out.train = read_level_set(cfg.train_manifest);
        out.test = read_level_set(cfg.test_manifest);
        return out;
    }
    if (cfg.game == GameId::SimpleZelda &&
        (cfg.sz_interior_rows != 7 || cfg.sz_interior_cols != 11)) {
        SplitSets out;
        out.train = enumerate_simple_zelda(Side::Left, cfg.sz_interior_rows,
                                           cfg.sz_interior_cols);
        out.test = enumerate_simple_zelda(Side::Right, cfg.sz_interior_rows,
                                          cfg.sz_interior_cols);
        return out;
    }
    return builtin_sets(cfg.game);
}

}  // namespace egogrid
