#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egogrid/checkpoint.hpp"
#include "egogrid/errors.hpp"
#include "egogrid/harness.hpp"

using namespace egogrid;

namespace {

// Exit codes: 0 ok, 1 usage, 2 config, 3 level validation, 4 io, 5 numeric,
// 6 checkpoint (README).
enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kConfig = 2,
    kValidation = 3,
    kIo = 4,
    kNumeric = 5,
    kCheckpoint = 6,
};

TransformConfig parse_transform_flags(const std::string& csv, int crop_size) {
    TransformConfig tc;
    tc.crop_size = crop_size;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "translate") {
            tc.translate = true;
        } else if (item == "rotate") {
            tc.rotate = true;
        } else if (item == "crop") {
            tc.crop = true;
        } else if (item != "none") {
            throw ConfigError("unknown transform '" + item +
                              "' (translate, rotate, crop, none)");
        }
    }
    tc.validate();
    return tc;
}

int cmd_train(const std::string& config_path, const std::string& results_override) {
    ExperimentConfig cfg = load_experiment_config(config_path);
    if (!results_override.empty()) cfg.results_dir = results_override;
    RunResult result = run_experiment(cfg);
    std::printf("run %s: train %.1f%% +/- %.1f%%, test %.1f%% +/- %.1f%% (over %zu seeds)\n",
                result.run_dir.c_str(), 100 * result.mean_win_rate(LevelRole::Train),
                100 * result.std_win_rate(LevelRole::Train),
                100 * result.mean_win_rate(LevelRole::Test),
                100 * result.std_win_rate(LevelRole::Test), result.seeds.size());
    return kOk;
}

int cmd_eval(const std::string& config_path, const std::string& checkpoint_path,
             const std::string& role, int episodes, uint64_t seed, const std::string& out) {
    ExperimentConfig cfg = load_experiment_config(config_path);
    SplitSets sets = resolve_levels(cfg);
    const LevelSet& levels = role == "train" ? sets.train : sets.test;
    PolicyNet<float> net = load_checkpoint(checkpoint_path);
    if (net.config() != cfg.net_config()) {
        throw CheckpointError("checkpoint architecture does not match the config");
    }
    EnvConfig env = cfg.env_config();
    if (cfg.eval_episode_cap > 0) env.episode_cap = cfg.eval_episode_cap;
    NetPolicy policy(net);
    EvalSummary summary = evaluate_policy(policy, levels, env,
                                          episodes > 0 ? episodes : cfg.eval_episodes, seed);
    std::printf("%s %s: win rate %.2f%% (%d/%d episodes; %d losses, %d timeouts)\n",
                to_string(cfg.game).c_str(), role.c_str(), 100 * summary.win_rate(),
                summary.wins(), summary.episodes(), summary.losses(), summary.timeouts());
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw IoError("cannot write " + out);
        file << "level_index,level_name,wins,losses,timeouts,episodes\n";
        for (size_t i = 0; i < summary.per_level.size(); ++i) {
            const LevelEval& lv = summary.per_level[i];
            file << i << "," << lv.name << "," << lv.wins << "," << lv.losses << ","
                 << lv.timeouts << "," << summary.episodes_per_level << "\n";
        }
    }
    return kOk;
}

int cmd_matrix(const std::string& config_path, const std::string& games_csv, uint64_t frames,
               const std::string& results_override) {
    ExperimentConfig base = load_experiment_config(config_path);
    if (!results_override.empty()) base.results_dir = results_override;
    if (frames > 0) base.total_frames = frames;
    std::vector<GameId> games;
    std::string item;
    std::stringstream ss(games_csv);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) games.push_back(game_id_from_string(item));
    }
    if (games.empty()) throw ConfigError("matrix needs at least one game");
    std::vector<RunResult> results = run_matrix(base, games);
    std::printf("matrix complete: %zu runs (%zu games x 6 configs)\n", results.size(),
                games.size());
    const std::string dir = resolve_results_dir(base);
    auto rows = collect_summaries(dir);
    for (const std::string& p : write_reports(rows, dir)) {
        std::printf("wrote %s\n", p.c_str());
    }
    std::printf("wrote %s\n",
                merge_length_histograms(dir, dir + "/lengths_hist.csv").c_str());
    return kOk;
}

int cmd_report(const std::string& results_dir, const std::string& out_dir) {
    auto rows = collect_summaries(results_dir);
    const std::string dir = out_dir.empty() ? results_dir : out_dir;
    for (const std::string& p : write_reports(rows, dir)) {
        std::printf("wrote %s\n", p.c_str());
    }
    std::printf("wrote %s\n",
                merge_length_histograms(results_dir, dir + "/lengths_hist.csv").c_str());
    return kOk;
}

int cmd_render_dump(const std::string& game_name, const std::string& level_file,
                    const std::string& builtin_ref, const std::string& transforms,
                    int crop_size, const std::string& avatar, int tile_size,
                    const std::string& resolution, const std::string& steps, uint64_t seed,
                    bool random_facing, const std::string& out) {
    GameId game = game_id_from_string(game_name);
    LevelSpec level;
    if (!level_file.empty()) {
        std::ifstream in(level_file, std::ios::binary);
        if (!in) throw IoError("cannot open level file " + level_file);
        std::string text(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>{});
        level = parse_level(text, game, std::filesystem::path(level_file).stem().string());
    } else {
        // builtin_ref is "<role>:<index>", e.g. train:0
        const size_t colon = builtin_ref.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("--builtin expects <train|test>:<index>");
        }
        const std::string role = builtin_ref.substr(0, colon);
        const size_t index = std::stoul(builtin_ref.substr(colon + 1));
        SplitSets sets = builtin_sets(game);
        const LevelSet& set = role == "train" ? sets.train : sets.test;
        level = set.levels.at(index);
    }

    RenderConfig rcfg;
    rcfg.tile_size = tile_size;
    if (avatar == "original") {
        rcfg.avatar_mode = AvatarMode::Original;
    } else if (avatar == "replace_all") {
        rcfg.avatar_mode = AvatarMode::ReplaceAll;
    } else if (avatar != "replace_avatar") {
        throw ConfigError("unknown avatar mode '" + avatar + "'");
    }
    TransformConfig tcfg = parse_transform_flags(transforms, crop_size);

    GameState state = init_state(level, seed, random_facing);
    Ruleset rules = ruleset_for(game);
    for (char c : steps) {
        Action a;
        switch (c) {
            case 'U': a = Action::Up; break;
            case 'D': a = Action::Down; break;
            case 'L': a = Action::Left; break;
            case 'R': a = Action::Right; break;
            case 'X': a = Action::Use; break;
            case 'N': a = Action::Noop; break;
            default: throw ConfigError(std::string("unknown step letter '") + c + "'");
        }
        rules.step(state, a);
    }

    if (resolution == "native") {
        // Identity scaling: pre-compute the pipeline's output tile dims.
        int th = state.height, tw = state.width;
        if (tcfg.translate) {
            th = 2 * th - 1;
            tw = 2 * tw - 1;
        }
        if (tcfg.rotate && static_cast<int>(state.facing) % 2 == 1) std::swap(th, tw);
        if (tcfg.crop) th = tw = tcfg.crop_size;
        rcfg.out_height = th * tile_size;
        rcfg.out_width = tw * tile_size;
    } else {
        const size_t x = resolution.find('x');
        if (x == std::string::npos) throw ConfigError("--resolution expects HxW or 'native'");
        rcfg.out_height = std::stoi(resolution.substr(0, x));
        rcfg.out_width = std::stoi(resolution.substr(x + 1));
    }

    EgoObservation ego = apply_pipeline(state, rcfg, tcfg);
    write_png(out, ego.obs);
    std::printf("wrote %s (%dx%d, %d channel(s), frame=%s)\n", out.c_str(), ego.obs.width,
                ego.obs.height, ego.obs.channels,
                ego.frame == Frame::Ego ? "ego" : "world");
    return kOk;
}

int cmd_gen_levels(const std::string& game_name, int count, uint64_t seed,
                   const std::string& out_dir, const std::string& builtin_role) {
    GameId game = game_id_from_string(game_name);
    LevelSet set;
    if (!builtin_role.empty()) {
        SplitSets sets = builtin_sets(game);
        set = builtin_role == "train" ? sets.train : sets.test;
    } else {
        set = generate_levels(game, count, seed);
    }
    write_level_set(set, game, out_dir, "manifest.json");
    std::printf("wrote %zu levels + manifest.json to %s\n", set.levels.size(),
                out_dir.c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"egogrid: egocentric observation transforms on tile games, with an A2C "
                 "learner and a train/test generalization harness"};
    app.require_subcommand(1);

    std::string config_path, results_dir, checkpoint, role = "test", out;
    std::string games_csv = "simple_zelda";
    int episodes = 0;
    uint64_t seed = 9000, frames = 0;

    auto* train = app.add_subcommand("train", "Train one experiment configuration");
    train->add_option("--config", config_path, "experiment config JSON")->required();
    train->add_option("--results", results_dir, "override results directory");

    auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint on train or test levels");
    eval->add_option("--config", config_path, "experiment config JSON")->required();
    eval->add_option("--checkpoint", checkpoint, "checkpoint file")->required();
    eval->add_option("--role", role, "train|test (default test)");
    eval->add_option("--episodes", episodes, "episodes per level (default from config)");
    eval->add_option("--seed", seed, "evaluation seed");
    eval->add_option("--out", out, "per-level CSV output path");

    auto* matrix = app.add_subcommand("matrix", "Run the 6-config transform matrix per game");
    matrix->add_option("--config", config_path, "base experiment config JSON")->required();
    matrix->add_option("--games", games_csv, "comma-separated game list");
    matrix->add_option("--frames", frames, "override frame budget");
    matrix->add_option("--results", results_dir, "override results directory");

    auto* report = app.add_subcommand("report", "Aggregate results into tables");
    report->add_option("--results", results_dir, "results directory")->required();
    report->add_option("--out", out, "output directory (default: results dir)");

    std::string level_file, builtin_ref = "train:0", transforms = "none";
    std::string avatar = "replace_avatar", game_name = "zelda", steps;
    std::string resolution = "native";
    int crop_size = 5, tile_size = 8;
    bool random_facing = false;
    auto* dump = app.add_subcommand("render-dump", "Write a pipeline observation as PNG");
    dump->add_option("--game", game_name, "game id")->required();
    dump->add_option("--level-file", level_file, "level text file");
    dump->add_option("--builtin", builtin_ref, "builtin level <train|test>:<index>");
    dump->add_option("--transform", transforms,
                     "comma list of translate,rotate,crop (or none)");
    dump->add_option("--crop-size", crop_size, "crop window (odd)");
    dump->add_option("--avatar-mode", avatar, "original|replace_avatar|replace_all");
    dump->add_option("--tile-size", tile_size, "pixels per tile");
    dump->add_option("--resolution", resolution, "output HxW, or 'native' for unscaled");
    dump->add_option("--steps", steps, "actions to apply first (letters UDLRXN)");
    dump->add_option("--seed", seed, "episode seed");
    dump->add_flag("--random-facing", random_facing, "randomize initial facing");
    dump->add_option("--out", out, "output PNG path")->required();

    int count = 50;
    std::string builtin_role;
    auto* gen = app.add_subcommand("gen-levels", "Generate or export level sets");
    gen->add_option("--game", game_name, "game id")->required();
    gen->add_option("--count", count, "levels to generate");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--builtin", builtin_role,
                    "export the builtin train|test set instead of generating");
    gen->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed()) return cmd_train(config_path, results_dir);
        if (eval->parsed()) return cmd_eval(config_path, checkpoint, role, episodes, seed, out);
        if (matrix->parsed()) return cmd_matrix(config_path, games_csv, frames, results_dir);
        if (report->parsed()) return cmd_report(results_dir, out);
        if (dump->parsed()) {
            return cmd_render_dump(game_name, level_file, builtin_ref, transforms, crop_size,
                                   avatar, tile_size, resolution, steps, seed, random_facing,
                                   out);
        }
        if (gen->parsed()) return cmd_gen_levels(game_name, count, seed, out, builtin_role);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kValidation;
    } catch (const CheckpointError& e) {
        std::fprintf(stderr, "checkpoint error: %s\n", e.what());
        return kCheckpoint;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kNumeric;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kIo;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIo;
    }
    return kUsage;
}
