#include <algorithm>

#include "egogrid/harness.hpp"

namespace egogrid {

int EvalSummary::wins() const {
    int n = 0;
    for (const LevelEval& l : per_level) n += l.wins;
    return n;
}
int EvalSummary::losses() const {
    int n = 0;
    for (const LevelEval& l : per_level) n += l.losses;
    return n;
}
int EvalSummary::timeouts() const {
    int n = 0;
    for (const LevelEval& l : per_level) n += l.timeouts;
    return n;
}
double EvalSummary::win_rate() const {
    const int total = episodes();
    return total == 0 ? 0.0 : static_cast<double>(wins()) / total;
}

EvalSummary evaluate_policy(Policy& policy, const LevelSet& levels, const EnvConfig& env_cfg,
                            int episodes_per_level, uint64_t eval_seed, int max_parallel) {
    EvalSummary summary;
    summary.episodes_per_level = episodes_per_level;
    summary.per_level.resize(levels.levels.size());
    for (size_t i = 0; i < levels.levels.size(); ++i) {
        summary.per_level[i].name = levels.levels[i].name;
    }

    struct Job {
        size_t level;
        int episode;
    };
    std::vector<Job> jobs;
    jobs.reserve(levels.levels.size() * static_cast<size_t>(episodes_per_level));
    for (size_t l = 0; l < levels.levels.size(); ++l) {
        for (int e = 0; e < episodes_per_level; ++e) {
            jobs.push_back({l, e});
        }
    }

    struct Slot {
        EpisodeEnv env;
        size_t level;
    };
    std::vector<Slot> slots;
    size_t next_job = 0;
    auto load = [&](Slot& slot, const Job& job) {
        slot.level = job.level;
        // Per-episode seed: deterministic in (eval seed, level, episode).
        slot.env.reset_to(job.level,
                          mix_seed(eval_seed, static_cast<uint64_t>(job.level),
                                   static_cast<uint64_t>(job.episode)));
    };

    const size_t n_parallel = std::min(jobs.size(), static_cast<size_t>(max_parallel));
    slots.reserve(n_parallel);
    for (size_t i = 0; i < n_parallel; ++i) {
        const Job& job = jobs[next_job++];
        slots.push_back(Slot{EpisodeEnv(env_cfg, &levels, 0), job.level});
        load(slots.back(), job);
    }

    const size_t obs_size = slots.empty() ? 0 : slots[0].env.obs_size();
    std::vector<float> obs;
    std::vector<const GameState*> states;
    std::vector<int> actions;
    size_t active = slots.size();

    while (active > 0) {
        obs.resize(active * obs_size);
        states.resize(active);
        for (size_t i = 0; i < active; ++i) {
            slots[i].env.write_obs(obs.data() + i * obs_size);
            states[i] = &slots[i].env.state();
        }
        policy.act(obs.data(), static_cast<int>(active), obs_size, states, actions);
        for (size_t i = 0; i < active;) {
            EnvStep st = slots[i].env.step(actions[i]);
            if (!st.done) {
                ++i;
                continue;
            }
            LevelEval& lv = summary.per_level[slots[i].level];
            switch (st.outcome) {
                case Outcome::Win: lv.wins += 1; break;
                case Outcome::Loss: lv.losses += 1; break;
                case Outcome::Timeout: lv.timeouts += 1; break;
            }
            lv.mean_length += slots[i].env.episode_length();
            lv.mean_score += slots[i].env.state().score;
            summary.length_histogram[slots[i].env.episode_length()] += 1;
            if (next_job < jobs.size()) {
                load(slots[i], jobs[next_job++]);
                ++i;
            } else {
                slots.erase(slots.begin() + static_cast<ptrdiff_t>(i));
                actions.erase(actions.begin() + static_cast<ptrdiff_t>(i));
                --active;
            }
        }
    }

    for (LevelEval& lv : summary.per_level) {
        const int n = lv.wins + lv.losses + lv.timeouts;
        if (n > 0) {
            lv.mean_length /= n;
            lv.mean_score /= n;
        }
    }
    return summary;
}

}  // namespace egogrid
