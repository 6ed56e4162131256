#pragma once

#include <map>
#include <string>
#include <vector>

#include "egogrid/policy.hpp"
#include "egogrid/rollout.hpp"

namespace egogrid {

struct EarlyStopConfig {
    bool enabled = true;
    double win_threshold = 0.95;  // trailing train win rate to hold
    int window = 200;             // episodes in the trailing window
    int checks = 3;               // consecutive passing checks required
    int interval_updates = 250;   // check spacing
};

struct ExperimentConfig {
    GameId game = GameId::SimpleZelda;

    // Level sources: the builtin split, or manifest files.
    std::string level_source = "builtin";  // "builtin" | "manifest"
    std::string train_manifest;
    std::string test_manifest;
    int sz_interior_rows = 7;  // simple zelda enumeration geometry
    int sz_interior_cols = 11;

    RulesetParams rules;
    TransformConfig transform;
    RenderConfig render;
    A2CConfig agent;
    // Net widths; input dims and action count are derived at setup.
    std::array<int, 3> conv_channels{16, 32, 32};
    std::array<int, 3> conv_kernels{8, 4, 3};
    std::array<int, 3> conv_strides{4, 2, 1};
    int fc_width = 256;

    int frame_stack = 4;
    uint64_t total_frames = 2000000;
    int episode_cap = 2000;
    bool random_facing = true;
    EarlyStopConfig early_stop;
    std::vector<uint64_t> seeds{1, 2, 3};

    int eval_episodes = 20;
    uint64_t eval_seed = 9000;
    int eval_episode_cap = 0;  // 0 -> episode_cap

    std::string results_dir = "results";
    std::string run_name;  // defaults to <game>_c#t#r#<avatar suffix>
    int log_interval = 50;

    std::string default_run_name() const;
    NetConfig net_config() const;  // derived input dims / action count
    EnvConfig env_config() const;
};

// JSON round-trip; unknown keys are rejected to catch typos.
ExperimentConfig experiment_config_from_json(const std::string& text);
std::string experiment_config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_experiment_config(const std::string& path);

// $EGOGRID_RESULTS_DIR wins over the config value when set.
std::string resolve_results_dir(const ExperimentConfig& cfg);

// Train/test levels for the config (builtin split, manifests, or the
// simple-zelda enumeration geometry).
SplitSets resolve_levels(const ExperimentConfig& cfg);

struct LevelEval {
    std::string name;
    int wins = 0;
    int losses = 0;
    int timeouts = 0;
    double mean_length = 0.0;
    double mean_score = 0.0;
};

struct EvalSummary {
    std::vector<LevelEval> per_level;
    int episodes_per_level = 0;
    std::map<int, int> length_histogram;  // episode length -> count

    int wins() const;
    int losses() const;
    int timeouts() const;
    int episodes() const { return episodes_per_level * static_cast<int>(per_level.size()); }
    double win_rate() const;
};

// Greedy batched evaluation: episodes_per_level per level, random initial
// facing per episode, deterministic in eval_seed. Runs many episodes in
// lockstep so network forwards batch up.
EvalSummary evaluate_policy(Policy& policy, const LevelSet& levels, const EnvConfig& env_cfg,
                            int episodes_per_level, uint64_t eval_seed, int max_parallel = 256);

struct SeedResult {
    uint64_t seed = 0;
    uint64_t frames_trained = 0;
    int updates = 0;
    bool aborted = false;
    std::string abort_reason;
    EvalSummary train_eval;
    EvalSummary test_eval;
};

struct RunResult {
    ExperimentConfig cfg;
    std::string run_dir;
    std::vector<SeedResult> seeds;

    double mean_win_rate(LevelRole role) const;
    double std_win_rate(LevelRole role) const;  // population std across seeds
};

// Trains one seed to the frame budget (or early stop), writes the training
// log CSV and checkpoint under run_dir, evaluates train and test sets.
SeedResult train_and_eval_seed(const ExperimentConfig& cfg, uint64_t seed,
                               const std::string& run_dir, const SplitSets& levels);

// All seeds of one configuration; writes per-run summary.csv, eval CSVs and
// histograms under <results>/<run_name>/.
RunResult run_experiment(const ExperimentConfig& cfg);

// The 6 legal transform configs for each game, seeds from the base config.
std::vector<RunResult> run_matrix(const ExperimentConfig& base,
                                  const std::vector<GameId>& games);

// Reads every summary.csv under results_dir.
struct SummaryRow {
    std::string run;
    GameId game = GameId::SimpleZelda;
    int crop = 0, translate = 0, rotate = 0;
    std::string avatar_mode;
    uint64_t seed = 0;
    std::string role;
    int levels = 0, episodes_per_level = 0, wins = 0, losses = 0, timeouts = 0;
    double win_rate = 0.0, mean_length = 0.0, mean_score = 0.0;
};
std::vector<SummaryRow> collect_summaries(const std::string& results_dir);

// table.csv + table.txt (mean +/- std over seeds per config and role) and
// relative.csv (test win rate minus the all-off baseline, per game).
// Returns the paths written.
std::vector<std::string> write_reports(const std::vector<SummaryRow>& rows,
                                       const std::string& out_dir);

// Concatenates every per-run lengths_hist_*.csv under results_dir into one
// file with run/seed/role columns.
std::string merge_length_histograms(const std::string& results_dir,
                                    const std::string& out_path);

}  // namespace egogrid
