#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "egogrid/a2c.hpp"
#include "egogrid/games.hpp"
#include "egogrid/transforms.hpp"

namespace egogrid {

enum class Outcome : uint8_t { Win = 0, Loss = 1, Timeout = 2 };

struct EnvConfig {
    GameId game = GameId::SimpleZelda;
    RulesetParams rules;
    RenderConfig render;
    TransformConfig transform;
    int frame_stack = 4;
    int episode_cap = 2000;
    bool random_facing = true;
};

struct EnvStep {
    float reward = 0.0f;
    bool done = false;
    Outcome outcome = Outcome::Loss;  // valid when done
};

struct EpisodeRecord {
    double total_reward = 0.0;
    int length = 0;
    Outcome outcome = Outcome::Loss;
};

// One worker's environment: game state, observation pipeline and frame
// stack, with automatic level sampling on reset. Actions come in as indices
// into the game's action set; when rotation is enabled they are interpreted
// in the ego frame and unrotated before being applied.
class EpisodeEnv {
public:
    EpisodeEnv(const EnvConfig& cfg, const LevelSet* levels, uint64_t env_seed);

    void reset();  // level sampled uniformly, fresh episode seed
    void reset_to(size_t level_index, uint64_t episode_seed);

    EnvStep step(int action_index);

    size_t obs_size() const;
    // Stacked frames, oldest first, normalized to [0,1].
    void write_obs(float* dst) const;

    const GameState& state() const { return state_; }
    const Ruleset& ruleset() const { return ruleset_; }
    const EnvConfig& config() const { return cfg_; }
    int episode_length() const { return steps_; }
    double episode_reward() const { return total_reward_; }

private:
    void start_episode(const LevelSpec& level, uint64_t episode_seed);

    EnvConfig cfg_;
    const LevelSet* levels_;
    Ruleset ruleset_;
    SplitMix64 env_rng_;
    GameState state_;
    FrameStack stack_;
    int steps_ = 0;
    double total_reward_ = 0.0;
};

// Synchronous collection across W workers. Keeps a sliding window of
// finished-episode records for the win-rate plateau check.
class RolloutCollector {
public:
    RolloutCollector(const EnvConfig& env_cfg, const LevelSet* levels, const A2CConfig& cfg,
                     uint64_t seed);

    // n_steps transitions per worker; fills bootstrap with V(s_n) per worker.
    RolloutBatch<float> collect(PolicyNet<float>& net, std::vector<float>& bootstrap);

    uint64_t frames() const { return frames_; }
    int episodes_finished() const { return episodes_finished_; }
    const std::deque<EpisodeRecord>& recent_episodes() const { return recent_; }
    double recent_win_rate(int window) const;
    double recent_mean(int window, bool reward_else_len) const;
    std::vector<EpisodeEnv>& envs() { return envs_; }

private:
    A2CConfig cfg_;
    std::vector<EpisodeEnv> envs_;
    SplitMix64 action_rng_;
    uint64_t frames_ = 0;
    int episodes_finished_ = 0;
    std::deque<EpisodeRecord> recent_;
};

}  // namespace egogrid
