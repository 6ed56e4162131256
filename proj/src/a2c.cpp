#include "egogrid/a2c.hpp"

#include <cmath>
#include <sstream>

#include "egogrid/errors.hpp"

namespace egogrid {

template <typename T>
LossReport a2c_loss(PolicyNet<T>& net, const T* obs, const int* actions, const T* returns,
                    const T* advantages, int batch, const A2CConfig& cfg,
                    std::vector<T>* grad) {
    const int n_actions = net.config().n_actions;
    typename PolicyNet<T>::Cache cache;
    std::vector<T> logits, values;
    net.forward(obs, batch, logits, values, grad ? &cache : nullptr);

    std::vector<T> probs(logits.size());
    nn::softmax_rows(logits.data(), batch, n_actions, probs.data());

    LossReport report;
    std::vector<T> dlogits(grad ? logits.size() : 0, T(0));
    std::vector<T> dvalues(grad ? values.size() : 0, T(0));
    const double inv_b = 1.0 / batch;

    for (int b = 0; b < batch; ++b) {
        const T* p = probs.data() + static_cast<size_t>(b) * n_actions;
        const int a = actions[b];
        const double adv = static_cast<double>(advantages[b]);
        const double logp_a = std::log(std::max(static_cast<double>(p[a]), 1e-30));
        double entropy = 0.0;
        for (int i = 0; i < n_actions; ++i) {
            const double pi = static_cast<double>(p[i]);
            if (pi > 0.0) entropy -= pi * std::log(pi);
        }
        const double verr = static_cast<double>(values[static_cast<size_t>(b)]) -
                            static_cast<double>(returns[b]);
        report.policy += -logp_a * adv * inv_b;
        report.value += verr * verr * inv_b;
        report.entropy += entropy * inv_b;

        if (grad) {
            T* dz = dlogits.data() + static_cast<size_t>(b) * n_actions;
            for (int i = 0; i < n_actions; ++i) {
                const double pi = static_cast<double>(p[i]);
                const double logpi = std::log(std::max(pi, 1e-30));
                // d(-logp_a * adv)/dz_i = adv * (p_i - [i==a])
                double d = adv * (pi - (i == a ? 1.0 : 0.0));
                // d(-entropy)/dz_i = p_i * (log p_i + entropy)
                d += cfg.entropy_coef * pi * (logpi + entropy);
                dz[i] = static_cast<T>(d * inv_b);
            }
            dvalues[static_cast<size_t>(b)] =
                static_cast<T>(cfg.value_coef * 2.0 * verr * inv_b);
        }
    }
    report.total = report.policy + cfg.value_coef * report.value -
                   cfg.entropy_coef * report.entropy;

    if (grad) {
        grad->assign(net.param_count(), T(0));
        net.backward(cache, dlogits, dvalues, *grad);
    }
    return report;
}

template <typename T>
LossReport a2c_update(PolicyNet<T>& net, RMSProp<T>& opt, const RolloutBatch<T>& batch,
                      const std::vector<T>& bootstrap, const A2CConfig& cfg) {
    std::vector<T> returns = compute_returns(batch, bootstrap, cfg.gamma);
    std::vector<T> advantages(returns.size());
    for (size_t i = 0; i < returns.size(); ++i) {
        advantages[i] = returns[i] - batch.values[i];
    }
    std::vector<T> grad;
    LossReport report = a2c_loss(net, batch.obs.data(), batch.actions.data(), returns.data(),
                                 advantages.data(), batch.size(), cfg, &grad);
    if (!std::isfinite(report.total)) {
        std::ostringstream dump;
        dump << "non-finite loss: total=" << report.total << " policy=" << report.policy
             << " value=" << report.value << " entropy=" << report.entropy
             << " batch=" << batch.size() << " returns[0]=" << returns[0]
             << " values[0]=" << batch.values[0];
        throw NumericError(dump.str());
    }
    clip_grad_norm(grad, cfg.max_grad_norm);
    opt.step(net.params(), grad, cfg.lr, cfg.rmsprop_decay, cfg.rmsprop_eps);
    return report;
}

template LossReport a2c_loss<float>(PolicyNet<float>&, const float*, const int*, const float*,
                                    const float*, int, const A2CConfig&, std::vector<float>*);
template LossReport a2c_loss<double>(PolicyNet<double>&, const double*, const int*,
                                     const double*, const double*, int, const A2CConfig&,
                                     std::vector<double>*);
template LossReport a2c_update<float>(PolicyNet<float>&, RMSProp<float>&,
                                      const RolloutBatch<float>&, const std::vector<float>&,
                                      const A2CConfig&);
template LossReport a2c_update<double>(PolicyNet<double>&, RMSProp<double>&,
                                       const RolloutBatch<double>&, const std::vector<double>&,
                                       const A2CConfig&);

}  // namespace egogrid
