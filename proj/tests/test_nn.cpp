#include <doctest.h>

#include <cmath>

#include "egogrid/a2c.hpp"
#include "egogrid/nn.hpp"

using namespace egogrid;

namespace {

// Independent 6-loop convolution reference.
template <typename T>
std::vector<T> naive_conv(const std::vector<T>& input, int batch, int in_c, int in_h, int in_w,
                          const std::vector<T>& weight, const std::vector<T>& bias, int out_c,
                          int kernel, int stride) {
    const int out_h = (in_h - kernel) / stride + 1;
    const int out_w = (in_w - kernel) / stride + 1;
    std::vector<T> out(static_cast<size_t>(batch) * out_c * out_h * out_w);
    for (int b = 0; b < batch; ++b) {
        for (int oc = 0; oc < out_c; ++oc) {
            for (int oy = 0; oy < out_h; ++oy) {
                for (int ox = 0; ox < out_w; ++ox) {
                    T acc = bias[static_cast<size_t>(oc)];
                    for (int c = 0; c < in_c; ++c) {
                        for (int ky = 0; ky < kernel; ++ky) {
                            for (int kx = 0; kx < kernel; ++kx) {
                                const size_t ii =
                                    ((static_cast<size_t>(b) * in_c + c) * in_h + oy * stride +
                                     ky) *
                                        in_w +
                                    ox * stride + kx;
                                const size_t wi =
                                    ((static_cast<size_t>(oc) * in_c + c) * kernel + ky) *
                                        kernel +
                                    kx;
                                acc += input[ii] * weight[wi];
                            }
                        }
                    }
                    out[((static_cast<size_t>(b) * out_c + oc) * out_h + oy) * out_w + ox] =
                        acc;
                }
            }
        }
    }
    return out;
}

// Small random integers: every product and partial sum is exact in float and
// double, so GEMM-vs-naive equality is bitwise regardless of summation order.
template <typename T>
std::vector<T> random_ints(size_t n, SplitMix64& rng, int lo = -4, int hi = 4) {
    std::vector<T> out(n);
    for (T& v : out) {
        v = static_cast<T>(static_cast<int>(rng.below(static_cast<uint32_t>(hi - lo + 1))) +
                           lo);
    }
    return out;
}

NetConfig tiny_net_config() {
    NetConfig cfg;
    cfg.in_channels = 2;
    cfg.in_h = 10;
    cfg.in_w = 10;
    cfg.conv_channels = {3, 4, 5};
    cfg.conv_kernels = {3, 2, 2};
    cfg.conv_strides = {2, 2, 1};
    cfg.fc_width = 6;
    cfg.n_actions = 4;
    return cfg;
}

}  // namespace

TEST_SUITE("nn") {

TEST_CASE("conv forward matches the naive 6-loop oracle exactly") {
    SplitMix64 rng(1);
    struct Case {
        int batch, in_c, in_h, in_w, out_c, kernel, stride;
    };
    for (const Case& tc : {Case{2, 3, 9, 8, 4, 3, 2}, Case{1, 1, 6, 6, 2, 2, 1},
                           Case{3, 4, 12, 10, 8, 4, 2}, Case{2, 12, 36, 36, 6, 8, 4}}) {
        nn::Conv2d<double> conv;
        conv.configure(tc.in_c, tc.in_h, tc.in_w, tc.out_c, tc.kernel, tc.stride);
        auto input = random_ints<double>(
            static_cast<size_t>(tc.batch) * tc.in_c * tc.in_h * tc.in_w, rng);
        auto weight = random_ints<double>(conv.weight_count(), rng);
        auto bias = random_ints<double>(static_cast<size_t>(tc.out_c), rng);
        std::vector<double> out(static_cast<size_t>(tc.batch) * conv.out_size());
        std::vector<double> col;
        conv.forward(input.data(), tc.batch, weight.data(), bias.data(), out.data(), col);
        auto expect = naive_conv(input, tc.batch, tc.in_c, tc.in_h, tc.in_w, weight, bias,
                                 tc.out_c, tc.kernel, tc.stride);
        REQUIRE(out == expect);

        // Float path as well.
        nn::Conv2d<float> convf;
        convf.configure(tc.in_c, tc.in_h, tc.in_w, tc.out_c, tc.kernel, tc.stride);
        std::vector<float> inputf(input.begin(), input.end());
        std::vector<float> weightf(weight.begin(), weight.end());
        std::vector<float> biasf(bias.begin(), bias.end());
        std::vector<float> outf(out.size());
        std::vector<float> colf;
        convf.forward(inputf.data(), tc.batch, weightf.data(), biasf.data(), outf.data(),
                      colf);
        std::vector<float> expectf(expect.begin(), expect.end());
        REQUIRE(outf == expectf);
    }
}

TEST_CASE("linear layer matches a hand dot product exactly") {
    SplitMix64 rng(2);
    nn::Linear<double> fc;
    fc.configure(7, 5);
    auto x = random_ints<double>(3 * 7, rng);
    auto w = random_ints<double>(fc.weight_count(), rng);
    auto b = random_ints<double>(5, rng);
    std::vector<double> y(3 * 5);
    fc.forward(x.data(), 3, w.data(), b.data(), y.data());
    for (int row = 0; row < 3; ++row) {
        for (int o = 0; o < 5; ++o) {
            double acc = b[static_cast<size_t>(o)];
            for (int i = 0; i < 7; ++i) {
                acc += x[static_cast<size_t>(row * 7 + i)] * w[static_cast<size_t>(o * 7 + i)];
            }
            REQUIRE(y[static_cast<size_t>(row * 5 + o)] == acc);
        }
    }
}

TEST_CASE("zeroed parameters give a uniform policy and zero value") {
    PolicyNet<double> net(tiny_net_config(), 7);
    std::fill(net.params().begin(), net.params().end(), 0.0);
    std::vector<double> obs(net.obs_size() * 2, 0.7);
    std::vector<double> logits, values;
    net.forward(obs.data(), 2, logits, values);
    for (double z : logits) CHECK(z == 0.0);
    for (double v : values) CHECK(v == 0.0);
    std::vector<double> probs(logits.size());
    nn::softmax_rows(logits.data(), 2, 4, probs.data());
    for (double p : probs) CHECK(p == doctest::Approx(0.25));
}

TEST_CASE("forward is deterministic; seeds change the init") {
    NetConfig cfg = tiny_net_config();
    PolicyNet<float> a(cfg, 42), b(cfg, 42), c(cfg, 43);
    CHECK(a.params() == b.params());
    CHECK(a.params() != c.params());
    SplitMix64 rng(9);
    std::vector<float> obs(a.obs_size());
    for (float& v : obs) v = static_cast<float>(rng.uniform01());
    std::vector<float> l1, v1, l2, v2;
    a.forward(obs.data(), 1, l1, v1);
    a.forward(obs.data(), 1, l2, v2);
    CHECK(l1 == l2);
    CHECK(v1 == v2);
}

TEST_CASE("softmax rows sum to one") {
    SplitMix64 rng(3);
    std::vector<double> logits(6 * 9);
    for (double& z : logits) z = (rng.uniform01() - 0.5) * 20.0;
    std::vector<double> probs(logits.size());
    nn::softmax_rows(logits.data(), 6, 9, probs.data());
    for (int b = 0; b < 6; ++b) {
        double sum = 0.0;
        for (int i = 0; i < 9; ++i) sum += probs[static_cast<size_t>(b * 9 + i)];
        CHECK(std::abs(sum - 1.0) < 1e-6);
    }
}

TEST_CASE("full-loss gradient matches central finite differences") {
    // 64-bit check on several random small nets, frozen returns/advantages.
    const A2CConfig cfg;
    double worst = 0.0;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        PolicyNet<double> net(tiny_net_config(), seed);
        const int batch = 3;
        SplitMix64 rng(seed * 1000 + 17);
        std::vector<double> obs(net.obs_size() * batch);
        for (double& v : obs) v = rng.uniform01();
        std::vector<int> actions(batch);
        std::vector<double> returns(batch), advantages(batch);
        for (int b = 0; b < batch; ++b) {
            actions[static_cast<size_t>(b)] = static_cast<int>(rng.below(4));
            returns[static_cast<size_t>(b)] = rng.uniform01() * 2.0 - 1.0;
            advantages[static_cast<size_t>(b)] = rng.uniform01() * 2.0 - 1.0;
        }

        std::vector<double> grad;
        a2c_loss(net, obs.data(), actions.data(), returns.data(), advantages.data(), batch,
                 cfg, &grad);

        const double h = 1e-5;
        for (size_t p = 0; p < net.param_count(); ++p) {
            const double orig = net.params()[p];
            net.params()[p] = orig + h;
            double up = a2c_loss(net, obs.data(), actions.data(), returns.data(),
                                 advantages.data(), batch, cfg, nullptr)
                            .total;
            net.params()[p] = orig - h;
            double down = a2c_loss(net, obs.data(), actions.data(), returns.data(),
                                   advantages.data(), batch, cfg, nullptr)
                              .total;
            net.params()[p] = orig;
            const double fd = (up - down) / (2 * h);
            const double denom = std::max(std::abs(fd), std::abs(grad[p]));
            if (denom < 1e-8) continue;
            const double rel = std::abs(fd - grad[p]) / denom;
            worst = std::max(worst, rel);
            REQUIRE(rel < 1e-4);
        }
    }
    MESSAGE("worst relative error: ", worst);
}

TEST_CASE("rmsprop matches the textbook update on scalars") {
    RMSProp<double> opt;
    std::vector<double> p{1.0};
    const double lr = 0.1, decay = 0.9, eps = 1e-8;
    // Step 1, gradient 0.5.
    opt.step(p, {0.5}, lr, decay, eps);
    double acc = 0.1 * 0.25;
    double expect = 1.0 - lr * 0.5 / (std::sqrt(acc) + eps);
    CHECK(std::abs(p[0] - expect) < 1e-12);
    // Step 2, gradient -0.2.
    opt.step(p, {-0.2}, lr, decay, eps);
    acc = 0.9 * acc + 0.1 * 0.04;
    expect = expect - lr * (-0.2) / (std::sqrt(acc) + eps);
    CHECK(std::abs(p[0] - expect) < 1e-12);
}

TEST_CASE("n-step returns match a brute-force recomputation") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        RolloutBatch<double> batch;
        batch.n_steps = 1 + static_cast<int>(rng.below(8));
        batch.workers = 1 + static_cast<int>(rng.below(4));
        const int n = batch.size();
        batch.rewards.resize(static_cast<size_t>(n));
        batch.dones.resize(static_cast<size_t>(n));
        batch.values.assign(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            batch.rewards[static_cast<size_t>(i)] = rng.uniform01() * 2.0 - 1.0;
            batch.dones[static_cast<size_t>(i)] = rng.below(4) == 0 ? 1 : 0;
        }
        std::vector<double> bootstrap(static_cast<size_t>(batch.workers));
        for (double& v : bootstrap) v = rng.uniform01() * 2.0 - 1.0;
        const double gamma = 0.97;
        std::vector<double> got = compute_returns(batch, bootstrap, gamma);

        for (int w = 0; w < batch.workers; ++w) {
            for (int t = 0; t < batch.n_steps; ++t) {
                // Walk forward until an episode end or the horizon.
                double expect = 0.0;
                double discount = 1.0;
                bool truncated = false;
                for (int i = t; i < batch.n_steps; ++i) {
                    const size_t k = static_cast<size_t>(i * batch.workers + w);
                    expect += discount * batch.rewards[k];
                    if (batch.dones[k]) {
                        truncated = true;
                        break;
                    }
                    discount *= gamma;
                }
                if (!truncated) {
                    expect += discount * gamma * bootstrap[static_cast<size_t>(w)];
                }
                REQUIRE(std::abs(got[static_cast<size_t>(t * batch.workers + w)] - expect) <
                        1e-12);
            }
        }
    }
}

TEST_CASE("single-transition return arithmetic") {
    RolloutBatch<double> batch;
    batch.n_steps = 1;
    batch.workers = 1;
    batch.rewards = {1.0};
    batch.dones = {0};
    batch.values = {0.0};
    std::vector<double> returns = compute_returns(batch, {2.0}, 0.99);
    CHECK(returns[0] == doctest::Approx(2.98).epsilon(1e-12));
}

TEST_CASE("act_greedy breaks ties toward the lowest index") {
    std::vector<double> logits{0, 0, 0, 0, 0, 0};
    CHECK(act_greedy(logits, 0, 6) == 0);
    logits = {0.1, -1.0, 0.3, 2.0, 2.0, 0.0};
    CHECK(act_greedy(logits, 0, 6) == 3);
    for (double& z : logits) z += 5.0;
    CHECK(act_greedy(logits, 0, 6) == 3);
}

}  // TEST_SUITE
