#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "egogrid/checkpoint.hpp"
#include "egogrid/errors.hpp"
#include "egogrid/harness.hpp"

namespace egogrid {

namespace fs = std::filesystem;

namespace {

struct LogRow {
    int update;
    uint64_t frames;
    int episodes;
    double ep_reward_mean;
    double ep_len_mean;
    double win_rate;
    LossReport loss;
};

void write_train_log(const std::string& path, const std::vector<LogRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "update,frames,episodes,ep_reward_mean,ep_len_mean,train_win_rate,"
           "total_loss,policy_loss,value_loss,entropy\n";
    char buf[256];
    for (const LogRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%d,%" PRIu64 ",%d,%.6f,%.2f,%.4f,%.6f,%.6f,%.6f,%.6f\n", r.update,
                      r.frames, r.episodes, r.ep_reward_mean, r.ep_len_mean, r.win_rate,
                      r.loss.total, r.loss.policy, r.loss.value, r.loss.entropy);
        out << buf;
    }
}

void write_eval_csv(const std::string& path, const EvalSummary& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "level_index,level_name,wins,losses,timeouts,episodes,mean_length,mean_score\n";
    char buf[256];
    for (size_t i = 0; i < s.per_level.size(); ++i) {
        const LevelEval& lv = s.per_level[i];
        std::snprintf(buf, sizeof(buf), "%zu,%s,%d,%d,%d,%d,%.2f,%.4f\n", i, lv.name.c_str(),
                      lv.wins, lv.losses, lv.timeouts, s.episodes_per_level, lv.mean_length,
                      lv.mean_score);
        out << buf;
    }
}

void write_length_hist(const std::string& path, const EvalSummary& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "length,count\n";
    for (const auto& [len, count] : s.length_histogram) {
        out << len << "," << count << "\n";
    }
}

std::string role_name(LevelRole role) {
    return role == LevelRole::Train ? "train" : "test";
}

}  // namespace

SeedResult train_and_eval_seed(const ExperimentConfig& cfg, uint64_t seed,
                               const std::string& run_dir, const SplitSets& levels) {
    SeedResult result;
    result.seed = seed;

    NetConfig net_cfg = cfg.net_config();
    PolicyNet<float> net(net_cfg, seed);
    RMSProp<float> opt;
    RolloutCollector collector(cfg.env_config(), &levels.train, cfg.agent,
                               mix_seed(seed, 0xC0117EC7));

    std::vector<LogRow> log;
    const uint64_t frames_per_update =
        static_cast<uint64_t>(cfg.agent.n_steps) * static_cast<uint64_t>(cfg.agent.workers);
    const uint64_t max_updates = (cfg.total_frames + frames_per_update - 1) / frames_per_update;
    int plateau_checks = 0;
    std::vector<float> bootstrap;

    for (uint64_t update = 1; update <= max_updates; ++update) {
        LossReport loss;
        try {
            RolloutBatch<float> batch = collector.collect(net, bootstrap);
            loss = a2c_update(net, opt, batch, bootstrap, cfg.agent);
        } catch (const NumericError& e) {
            result.aborted = true;
            result.abort_reason = e.what();
            std::fprintf(stderr, "[egogrid] seed %" PRIu64 " aborted: %s\n", seed, e.what());
            break;
        }
        result.updates = static_cast<int>(update);
        result.frames_trained = collector.frames();

        if (update % static_cast<uint64_t>(cfg.log_interval) == 0 || update == max_updates) {
            log.push_back({static_cast<int>(update), collector.frames(),
                           collector.episodes_finished(), collector.recent_mean(100, true),
                           collector.recent_mean(100, false),
                           collector.recent_win_rate(cfg.early_stop.window), loss});
        }
        if (cfg.early_stop.enabled &&
            update % static_cast<uint64_t>(cfg.early_stop.interval_updates) == 0) {
            const bool window_full =
                collector.episodes_finished() >= cfg.early_stop.window;
            if (window_full &&
                collector.recent_win_rate(cfg.early_stop.window) >=
                    cfg.early_stop.win_threshold) {
                plateau_checks += 1;
                if (plateau_checks >= cfg.early_stop.checks) break;
            } else {
                plateau_checks = 0;
            }
        }
    }

    write_train_log(run_dir + "/train_log_seed" + std::to_string(seed) + ".csv", log);
    if (result.aborted) return result;

    save_checkpoint(run_dir + "/checkpoint_seed" + std::to_string(seed) + ".bin", net);

    EnvConfig eval_env = cfg.env_config();
    if (cfg.eval_episode_cap > 0) eval_env.episode_cap = cfg.eval_episode_cap;
    NetPolicy policy(net);
    result.train_eval = evaluate_policy(policy, levels.train, eval_env, cfg.eval_episodes,
                                        mix_seed(cfg.eval_seed, seed, 0));
    result.test_eval = evaluate_policy(policy, levels.test, eval_env, cfg.eval_episodes,
                                       mix_seed(cfg.eval_seed, seed, 1));

    const std::string s = std::to_string(seed);
    write_eval_csv(run_dir + "/eval_seed" + s + "_train.csv", result.train_eval);
    write_eval_csv(run_dir + "/eval_seed" + s + "_test.csv", result.test_eval);
    write_length_hist(run_dir + "/lengths_hist_seed" + s + "_train.csv", result.train_eval);
    write_length_hist(run_dir + "/lengths_hist_seed" + s + "_test.csv", result.test_eval);
    return result;
}

double RunResult::mean_win_rate(LevelRole role) const {
    double sum = 0.0;
    int n = 0;
    for (const SeedResult& s : seeds) {
        if (s.aborted) continue;
        sum += (role == LevelRole::Train ? s.train_eval : s.test_eval).win_rate();
        n += 1;
    }
    return n == 0 ? 0.0 : sum / n;
}

double RunResult::std_win_rate(LevelRole role) const {
    const double mean = mean_win_rate(role);
    double sq = 0.0;
    int n = 0;
    for (const SeedResult& s : seeds) {
        if (s.aborted) continue;
        const double x = (role == LevelRole::Train ? s.train_eval : s.test_eval).win_rate();
        sq += (x - mean) * (x - mean);
        n += 1;
    }
    return n == 0 ? 0.0 : std::sqrt(sq / n);
}

RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.transform.validate();
    RunResult result;
    result.cfg = cfg;
    const std::string run_name = cfg.run_name.empty() ? cfg.default_run_name() : cfg.run_name;
    result.run_dir = resolve_results_dir(cfg) + "/" + run_name;
    std::error_code ec;
    fs::create_directories(result.run_dir, ec);

    {
        std::ofstream out(result.run_dir + "/config.json", std::ios::binary);
        out << experiment_config_to_json(cfg);
    }

    SplitSets levels = resolve_levels(cfg);
    std::fprintf(stderr, "[egogrid] run %s: %zu train / %zu test levels, %zu seed(s)\n",
                 run_name.c_str(), levels.train.size(), levels.test.size(),
                 cfg.seeds.size());

    for (uint64_t seed : cfg.seeds) {
        SeedResult sr = train_and_eval_seed(cfg, seed, result.run_dir, levels);
        std::fprintf(stderr,
                     "[egogrid]   seed %" PRIu64 ": %" PRIu64 " frames, %d updates%s",
                     seed, sr.frames_trained, sr.updates, sr.aborted ? " (aborted)\n" : ", ");
        if (!sr.aborted) {
            std::fprintf(stderr, "train %.1f%% / test %.1f%%\n",
                         100.0 * sr.train_eval.win_rate(), 100.0 * sr.test_eval.win_rate());
        }
        result.seeds.push_back(std::move(sr));
    }

    // One summary row per (seed, role).
    std::ofstream out(result.run_dir + "/summary.csv", std::ios::binary);
    if (!out) throw IoError("cannot write " + result.run_dir + "/summary.csv");
    out << "run,game,crop,translate,rotate,avatar_mode,seed,role,levels,episodes_per_level,"
           "wins,losses,timeouts,win_rate,mean_length,mean_score\n";
    char buf[512];
    for (const SeedResult& sr : result.seeds) {
        if (sr.aborted) continue;
        for (LevelRole role : {LevelRole::Train, LevelRole::Test}) {
            const EvalSummary& ev = role == LevelRole::Train ? sr.train_eval : sr.test_eval;
            double mean_len = 0.0, mean_score = 0.0;
            for (const LevelEval& lv : ev.per_level) {
                mean_len += lv.mean_length;
                mean_score += lv.mean_score;
            }
            if (!ev.per_level.empty()) {
                mean_len /= static_cast<double>(ev.per_level.size());
                mean_score /= static_cast<double>(ev.per_level.size());
            }
            const char* avatar = cfg.render.avatar_mode == AvatarMode::Original
                                     ? "original"
                                     : (cfg.render.avatar_mode == AvatarMode::ReplaceAll
                                            ? "replace_all"
                                            : "replace_avatar");
            std::snprintf(buf, sizeof(buf),
                          "%s,%s,%d,%d,%d,%s,%" PRIu64 ",%s,%zu,%d,%d,%d,%d,%.6f,%.2f,%.4f\n",
                          run_name.c_str(), to_string(cfg.game).c_str(),
                          cfg.transform.crop ? 1 : 0, cfg.transform.translate ? 1 : 0,
                          cfg.transform.rotate ? 1 : 0, avatar, sr.seed,
                          role_name(role).c_str(), ev.per_level.size(),
                          ev.episodes_per_level, ev.wins(), ev.losses(), ev.timeouts(),
                          ev.win_rate(), mean_len, mean_score);
            out << buf;
        }
    }
    return result;
}

std::vector<RunResult> run_matrix(const ExperimentConfig& base,
                                  const std::vector<GameId>& games) {
    std::vector<RunResult> results;
    for (GameId game : games) {
        for (const TransformConfig& tc : legal_transform_configs(base.transform.crop_size)) {
            ExperimentConfig cfg = base;
            cfg.game = game;
            cfg.transform = tc;
            cfg.run_name.clear();
            results.push_back(run_experiment(cfg));
        }
    }
    return results;
}

}  // namespace egogrid
