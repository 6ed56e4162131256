#include "egogrid/rollout.hpp"

#include "egogrid/errors.hpp"

namespace egogrid {

EpisodeEnv::EpisodeEnv(const EnvConfig& cfg, const LevelSet* levels, uint64_t env_seed)
    : cfg_(cfg),
      levels_(levels),
      ruleset_(ruleset_for(cfg.game, cfg.rules)),
      env_rng_(env_seed),
      stack_(cfg.frame_stack) {
    if (!levels_ || levels_->levels.empty()) {
        throw ConfigError("EpisodeEnv needs a non-empty level set");
    }
    cfg_.transform.validate();
    reset();
}

void EpisodeEnv::reset() {
    size_t index = env_rng_.below(static_cast<uint32_t>(levels_->levels.size()));
    start_episode(levels_->levels[index], env_rng_.next());
}

void EpisodeEnv::reset_to(size_t level_index, uint64_t episode_seed) {
    start_episode(levels_->levels.at(level_index), episode_seed);
}

void EpisodeEnv::start_episode(const LevelSpec& level, uint64_t episode_seed) {
    state_ = init_state(level, episode_seed, cfg_.random_facing);
    steps_ = 0;
    total_reward_ = 0.0;
    stack_.reset(apply_pipeline(state_, cfg_.render, cfg_.transform).obs);
}

EnvStep EpisodeEnv::step(int action_index) {
    Action action = ruleset_.action_set().at(static_cast<size_t>(action_index));
    if (cfg_.transform.rotate) {
        action = ego_to_world_action(action, state_.facing);
    }
    StepResult result = ruleset_.step(state_, action);
    steps_ += 1;
    total_reward_ += result.reward;

    EnvStep out;
    out.reward = static_cast<float>(result.reward);
    if (result.done) {
        out.done = true;
        out.outcome = state_.status == Status::Win ? Outcome::Win : Outcome::Loss;
    } else if (steps_ >= cfg_.episode_cap) {
        out.done = true;
        out.outcome = Outcome::Timeout;
    }
    stack_.push(apply_pipeline(state_, cfg_.render, cfg_.transform).obs);
    return out;
}

size_t EpisodeEnv::obs_size() const {
    const auto& f = stack_.frames().front();
    return stack_.frames().size() * f.pixels.size();
}

void EpisodeEnv::write_obs(float* dst) const {
    size_t at = 0;
    for (const Observation& f : stack_.frames()) {
        for (uint8_t v : f.pixels) {
            dst[at++] = static_cast<float>(v) * (1.0f / 255.0f);
        }
    }
}

RolloutCollector::RolloutCollector(const EnvConfig& env_cfg, const LevelSet* levels,
                                   const A2CConfig& cfg, uint64_t seed)
    : cfg_(cfg), action_rng_(mix_seed(seed, 0xAC7)) {
    envs_.reserve(static_cast<size_t>(cfg.workers));
    for (int w = 0; w < cfg.workers; ++w) {
        envs_.emplace_back(env_cfg, levels, mix_seed(seed, 0xE4112, static_cast<uint64_t>(w)));
    }
}

RolloutBatch<float> RolloutCollector::collect(PolicyNet<float>& net,
                                              std::vector<float>& bootstrap) {
    const int W = cfg_.workers;
    const int n = cfg_.n_steps;
    const size_t obs_size = envs_[0].obs_size();
    if (obs_size != net.obs_size()) {
        throw ConfigError("network input size " + std::to_string(net.obs_size()) +
                          " != environment observation size " + std::to_string(obs_size));
    }
    const int n_actions = net.config().n_actions;

    RolloutBatch<float> batch;
    batch.n_steps = n;
    batch.workers = W;
    batch.obs_size = obs_size;
    batch.obs.resize(static_cast<size_t>(n) * W * obs_size);
    batch.actions.resize(static_cast<size_t>(n) * W);
    batch.rewards.resize(static_cast<size_t>(n) * W);
    batch.dones.resize(static_cast<size_t>(n) * W);
    batch.values.resize(static_cast<size_t>(n) * W);

    std::vector<float> step_obs(static_cast<size_t>(W) * obs_size);
    std::vector<float> logits, values, probs(static_cast<size_t>(W) * n_actions);

    for (int t = 0; t < n; ++t) {
        for (int w = 0; w < W; ++w) {
            envs_[static_cast<size_t>(w)].write_obs(step_obs.data() +
                                                    static_cast<size_t>(w) * obs_size);
        }
        net.forward(step_obs.data(), W, logits, values);
        nn::softmax_rows(logits.data(), W, n_actions, probs.data());

        std::copy(step_obs.begin(), step_obs.end(),
                  batch.obs.begin() + static_cast<size_t>(t) * W * obs_size);

        for (int w = 0; w < W; ++w) {
            const size_t i = static_cast<size_t>(t * W + w);
            // Inverse-CDF sample from the policy.
            const float* p = probs.data() + static_cast<size_t>(w) * n_actions;
            double u = action_rng_.uniform01();
            int a = n_actions - 1;
            double cum = 0.0;
            for (int k = 0; k < n_actions; ++k) {
                cum += static_cast<double>(p[k]);
                if (u < cum) {
                    a = k;
                    break;
                }
            }
            EpisodeEnv& env = envs_[static_cast<size_t>(w)];
            EnvStep st = env.step(a);
            batch.actions[i] = a;
            batch.rewards[i] = st.reward;
            batch.dones[i] = st.done ? 1 : 0;
            batch.values[i] = values[static_cast<size_t>(w)];
            frames_ += 1;
            if (st.done) {
                episodes_finished_ += 1;
                recent_.push_back({env.episode_reward(), env.episode_length(), st.outcome});
                if (recent_.size() > 2048) recent_.pop_front();
                env.reset();
            }
        }
    }

    for (int w = 0; w < W; ++w) {
        envs_[static_cast<size_t>(w)].write_obs(step_obs.data() +
                                                static_cast<size_t>(w) * obs_size);
    }
    net.forward(step_obs.data(), W, logits, values);
    bootstrap.assign(values.begin(), values.end());
    return batch;
}

double RolloutCollector::recent_win_rate(int window) const {
    if (recent_.empty()) return 0.0;
    size_t n = std::min(recent_.size(), static_cast<size_t>(window));
    int wins = 0;
    for (size_t i = recent_.size() - n; i < recent_.size(); ++i) {
        if (recent_[i].outcome == Outcome::Win) ++wins;
    }
    return static_cast<double>(wins) / static_cast<double>(n);
}

double RolloutCollector::recent_mean(int window, bool reward_else_len) const {
    if (recent_.empty()) return 0.0;
    size_t n = std::min(recent_.size(), static_cast<size_t>(window));
    double sum = 0.0;
    for (size_t i = recent_.size() - n; i < recent_.size(); ++i) {
        sum += reward_else_len ? recent_[i].total_reward
                               : static_cast<double>(recent_[i].length);
    }
    return sum / static_cast<double>(n);
}

}  // namespace egogrid
