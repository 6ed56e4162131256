#pragma once

#include <cstdint>
#include <vector>

#include "egogrid/nn.hpp"

namespace egogrid {

struct A2CConfig {
    double lr = 7e-4;
    double gamma = 0.99;
    double value_coef = 0.5;
    double entropy_coef = 0.01;
    double max_grad_norm = 0.5;
    double rmsprop_decay = 0.99;
    double rmsprop_eps = 1e-5;
    int n_steps = 5;
    int workers = 8;
};

// s <- decay*s + (1-decay)*g^2 ; p <- p - lr * g / (sqrt(s) + eps)
template <typename T>
struct RMSProp {
    std::vector<T> acc;

    void step(std::vector<T>& params, const std::vector<T>& grad, double lr, double decay,
              double eps) {
        if (acc.size() != params.size()) acc.assign(params.size(), T(0));
        for (size_t i = 0; i < params.size(); ++i) {
            acc[i] = static_cast<T>(decay * acc[i] + (1.0 - decay) * grad[i] * grad[i]);
            params[i] -= static_cast<T>(lr * grad[i] / (std::sqrt(acc[i]) + eps));
        }
    }
};

// One synchronized collection: n_steps transitions from each of W workers,
// step-major (index = t*workers + w).
template <typename T>
struct RolloutBatch {
    int n_steps = 0;
    int workers = 0;
    size_t obs_size = 0;
    std::vector<T> obs;        // (n*W) x obs_size
    std::vector<int> actions;  // indices into the game's action set
    std::vector<T> rewards;
    std::vector<uint8_t> dones;
    std::vector<T> values;  // V(s_t) at collection time

    int size() const { return n_steps * workers; }
};

// n-step discounted returns, truncated at episode ends and bootstrapped with
// V(s_{t+n}) at the tail: walk each worker's chain backwards from bootstrap.
template <typename T>
std::vector<T> compute_returns(const RolloutBatch<T>& batch, const std::vector<T>& bootstrap,
                               double gamma) {
    std::vector<T> returns(static_cast<size_t>(batch.size()));
    for (int w = 0; w < batch.workers; ++w) {
        T r = bootstrap[static_cast<size_t>(w)];
        for (int t = batch.n_steps - 1; t >= 0; --t) {
            const size_t i = static_cast<size_t>(t * batch.workers + w);
            r = batch.rewards[i] + static_cast<T>(gamma) * r * (batch.dones[i] ? T(0) : T(1));
            returns[i] = r;
        }
    }
    return returns;
}

struct LossReport {
    double total = 0.0;
    double policy = 0.0;
    double value = 0.0;
    double entropy = 0.0;
};

// Mean-over-batch A2C loss: -log pi(a|s) * advantage (advantage constant)
// + value_coef * (R - V)^2 - entropy_coef * entropy. If grad is non-null it
// receives d(total)/d(params), freshly overwritten.
template <typename T>
LossReport a2c_loss(PolicyNet<T>& net, const T* obs, const int* actions, const T* returns,
                    const T* advantages, int batch, const A2CConfig& cfg,
                    std::vector<T>* grad);

// Computes returns/advantages from the batch, takes one clipped RMSProp step.
// Throws NumericError on a non-finite loss, with a diagnostic dump.
template <typename T>
LossReport a2c_update(PolicyNet<T>& net, RMSProp<T>& opt, const RolloutBatch<T>& batch,
                      const std::vector<T>& bootstrap, const A2CConfig& cfg);

// Argmax over policy logits, lowest index on ties.
template <typename T>
int act_greedy(const std::vector<T>& logits, int offset, int n_actions) {
    int best = 0;
    for (int i = 1; i < n_actions; ++i) {
        if (logits[static_cast<size_t>(offset + i)] > logits[static_cast<size_t>(offset + best)]) {
            best = i;
        }
    }
    return best;
}

// L2 norm over the whole gradient; scales in place when above max_norm.
template <typename T>
double clip_grad_norm(std::vector<T>& grad, double max_norm) {
    double sq = 0.0;
    for (T g : grad) sq += static_cast<double>(g) * static_cast<double>(g);
    double norm = std::sqrt(sq);
    if (norm > max_norm && norm > 0.0) {
        const T s = static_cast<T>(max_norm / norm);
        for (T& g : grad) g *= s;
    }
    return norm;
}

extern template LossReport a2c_loss<float>(PolicyNet<float>&, const float*, const int*,
                                           const float*, const float*, int, const A2CConfig&,
                                           std::vector<float>*);
extern template LossReport a2c_loss<double>(PolicyNet<double>&, const double*, const int*,
                                            const double*, const double*, int, const A2CConfig&,
                                            std::vector<double>*);
extern template LossReport a2c_update<float>(PolicyNet<float>&, RMSProp<float>&,
                                             const RolloutBatch<float>&,
                                             const std::vector<float>&, const A2CConfig&);
extern template LossReport a2c_update<double>(PolicyNet<double>&, RMSProp<double>&,
                                              const RolloutBatch<double>&,
                                              const std::vector<double>&, const A2CConfig&);

}  // namespace egogrid
