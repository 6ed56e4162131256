#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "egogrid/errors.hpp"
#include "egogrid/rng.hpp"

namespace egogrid {

// Three conv layers and one fully-connected trunk with policy/value heads.
// Widths are configurable; the defaults follow the classic pixel-control
// sizes (16x8x8/4, 32x4x4/2, 32x3x3/1, fc 256).
struct NetConfig {
    int in_channels = 4;
    int in_h = 84;
    int in_w = 84;
    std::array<int, 3> conv_channels{16, 32, 32};
    std::array<int, 3> conv_kernels{8, 4, 3};
    std::array<int, 3> conv_strides{4, 2, 1};
    int fc_width = 256;
    int n_actions = 5;

    bool operator==(const NetConfig&) const = default;
};

namespace nn {

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using MatMap = Eigen::Map<Mat<T>>;
template <typename T>
using ConstMatMap = Eigen::Map<const Mat<T>>;

inline int conv_out_dim(int in, int kernel, int stride) {
    if (in < kernel) throw ConfigError("conv input smaller than kernel");
    return (in - kernel) / stride + 1;
}

// Gaussian via Box-Muller on the seeded generator.
template <typename T>
std::vector<T> randn(size_t n, SplitMix64& rng) {
    std::vector<T> out(n);
    for (size_t i = 0; i < n; i += 2) {
        double u1 = rng.uniform01(), u2 = rng.uniform01();
        while (u1 <= 1e-300) u1 = rng.uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        out[i] = static_cast<T>(r * std::cos(2.0 * M_PI * u2));
        if (i + 1 < n) out[i + 1] = static_cast<T>(r * std::sin(2.0 * M_PI * u2));
    }
    return out;
}

// Orthogonal init: QR of a gaussian matrix, rows x cols, scaled by gain.
template <typename T>
void orthogonal_init(T* w, int rows, int cols, double gain, SplitMix64& rng) {
    const bool tall = rows >= cols;
    const int r = tall ? rows : cols;
    const int c = tall ? cols : rows;
    std::vector<T> noise = randn<T>(static_cast<size_t>(r) * c, rng);
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> a =
        ConstMatMap<T>(noise.data(), r, c);
    Eigen::HouseholderQR<decltype(a)> qr(a);
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> q =
        qr.householderQ() * decltype(a)::Identity(r, c);
    // Sign-fix the diagonal so the distribution is uniform over orthogonals.
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> rmat =
        qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int j = 0; j < c; ++j) {
        if (rmat(j, j) < 0) q.col(j) = -q.col(j);
    }
    MatMap<T> out(w, rows, cols);
    if (tall) {
        out = q * static_cast<T>(gain);
    } else {
        out = q.transpose() * static_cast<T>(gain);
    }
}

template <typename T>
void relu_forward(std::vector<T>& x) {
    for (T& v : x) {
        if (v < T(0)) v = T(0);
    }
}

// Uses the post-activation values: gradient is zero exactly where the output
// was clamped.
template <typename T>
void relu_backward(const std::vector<T>& activated, std::vector<T>& grad) {
    for (size_t i = 0; i < grad.size(); ++i) {
        if (activated[i] <= T(0)) grad[i] = T(0);
    }
}

// Valid-padding strided convolution via im2col + GEMM. Parameters live in an
// external flat buffer (weight: out_c*in_c*k*k, bias: out_c).
template <typename T>
struct Conv2d {
    int in_c = 0, in_h = 0, in_w = 0;
    int out_c = 0, kernel = 1, stride = 1;
    int out_h = 0, out_w = 0;

    void configure(int ic, int ih, int iw, int oc, int k, int s) {
        in_c = ic;
        in_h = ih;
        in_w = iw;
        out_c = oc;
        kernel = k;
        stride = s;
        out_h = conv_out_dim(ih, k, s);
        out_w = conv_out_dim(iw, k, s);
    }
    size_t weight_count() const {
        return static_cast<size_t>(out_c) * in_c * kernel * kernel;
    }
    size_t in_size() const { return static_cast<size_t>(in_c) * in_h * in_w; }
    size_t out_size() const { return static_cast<size_t>(out_c) * out_h * out_w; }
    int patch_size() const { return in_c * kernel * kernel; }

    // col: (patch_size) x (batch*out_h*out_w), column n = (b, oy, ox).
    void im2col(const T* input, int batch, std::vector<T>& col) const {
        const int cols_per_image = out_h * out_w;
        const int n_cols = batch * cols_per_image;
        col.assign(static_cast<size_t>(patch_size()) * n_cols, T(0));
        for (int b = 0; b < batch; ++b) {
            const T* img = input + static_cast<size_t>(b) * in_size();
            for (int oy = 0; oy < out_h; ++oy) {
                for (int ox = 0; ox < out_w; ++ox) {
                    const int n = b * cols_per_image + oy * out_w + ox;
                    T* dst = col.data() + static_cast<size_t>(n);
                    const int iy0 = oy * stride, ix0 = ox * stride;
                    size_t row = 0;
                    for (int c = 0; c < in_c; ++c) {
                        for (int ky = 0; ky < kernel; ++ky) {
                            const T* src =
                                img + (static_cast<size_t>(c) * in_h + iy0 + ky) * in_w + ix0;
                            for (int kx = 0; kx < kernel; ++kx, ++row) {
                                dst[row * static_cast<size_t>(n_cols)] = src[kx];
                            }
                        }
                    }
                }
            }
        }
    }

    // output layout (B, out_c, out_h, out_w); caches im2col in `col`.
    void forward(const T* input, int batch, const T* weight, const T* bias, T* output,
                 std::vector<T>& col) const {
        im2col(input, batch, col);
        const int n_cols = batch * out_h * out_w;
        ConstMatMap<T> w(weight, out_c, patch_size());
        ConstMatMap<T> x(col.data(), patch_size(), n_cols);
        Mat<T> y = w * x;  // out_c x n_cols
        const int per_img = out_h * out_w;
        for (int b = 0; b < batch; ++b) {
            for (int oc = 0; oc < out_c; ++oc) {
                T* dst = output + (static_cast<size_t>(b) * out_c + oc) * per_img;
                const T bv = bias[oc];
                for (int i = 0; i < per_img; ++i) {
                    dst[i] = y(oc, b * per_img + i) + bv;
                }
            }
        }
    }

    void backward(const std::vector<T>& col, const T* weight, const T* grad_out, int batch,
                  T* grad_weight, T* grad_bias, T* grad_input) const {
        const int n_cols = batch * out_h * out_w;
        const int per_img = out_h * out_w;
        // Regroup grad_out into (out_c x n_cols).
        Mat<T> dy(out_c, n_cols);
        for (int b = 0; b < batch; ++b) {
            for (int oc = 0; oc < out_c; ++oc) {
                const T* src = grad_out + (static_cast<size_t>(b) * out_c + oc) * per_img;
                for (int i = 0; i < per_img; ++i) {
                    dy(oc, b * per_img + i) = src[i];
                }
            }
        }
        ConstMatMap<T> x(col.data(), patch_size(), n_cols);
        MatMap<T> dw(grad_weight, out_c, patch_size());
        dw.noalias() += dy * x.transpose();
        for (int oc = 0; oc < out_c; ++oc) {
            grad_bias[oc] += dy.row(oc).sum();
        }
        if (!grad_input) return;
        ConstMatMap<T> w(weight, out_c, patch_size());
        Mat<T> dcol = w.transpose() * dy;  // patch_size x n_cols
        // col2im accumulate.
        for (int b = 0; b < batch; ++b) {
            T* img = grad_input + static_cast<size_t>(b) * in_size();
            for (int oy = 0; oy < out_h; ++oy) {
                for (int ox = 0; ox < out_w; ++ox) {
                    const int n = b * per_img + oy * out_w + ox;
                    const int iy0 = oy * stride, ix0 = ox * stride;
                    size_t row = 0;
                    for (int c = 0; c < in_c; ++c) {
                        for (int ky = 0; ky < kernel; ++ky) {
                            T* dst =
                                img + (static_cast<size_t>(c) * in_h + iy0 + ky) * in_w + ix0;
                            for (int kx = 0; kx < kernel; ++kx, ++row) {
                                dst[kx] += dcol(static_cast<Eigen::Index>(row), n);
                            }
                        }
                    }
                }
            }
        }
    }
};

// y = x W^T + b, x: (batch x in), W: (out x in).
template <typename T>
struct Linear {
    int in = 0, out = 0;

    void configure(int i, int o) {
        in = i;
        out = o;
    }
    size_t weight_count() const { return static_cast<size_t>(in) * out; }

    void forward(const T* input, int batch, const T* weight, const T* bias, T* output) const {
        ConstMatMap<T> x(input, batch, in);
        ConstMatMap<T> w(weight, out, in);
        MatMap<T> y(output, batch, out);
        y.noalias() = x * w.transpose();
        ConstMatMap<T> b(bias, 1, out);
        y.rowwise() += b.row(0);
    }

    void backward(const T* input, const T* weight, const T* grad_out, int batch, T* grad_weight,
                  T* grad_bias, T* grad_input) const {
        ConstMatMap<T> x(input, batch, in);
        ConstMatMap<T> w(weight, out, in);
        ConstMatMap<T> dy(grad_out, batch, out);
        MatMap<T> dw(grad_weight, out, in);
        dw.noalias() += dy.transpose() * x;
        MatMap<T> db(grad_bias, 1, out);
        db.row(0) += dy.colwise().sum();
        if (!grad_input) return;
        MatMap<T> dx(grad_input, batch, in);
        dx.noalias() = dy * w;
    }
};

// Row-wise stable softmax.
template <typename T>
void softmax_rows(const T* logits, int batch, int n, T* probs) {
    for (int b = 0; b < batch; ++b) {
        const T* z = logits + static_cast<size_t>(b) * n;
        T* p = probs + static_cast<size_t>(b) * n;
        T zmax = z[0];
        for (int i = 1; i < n; ++i) zmax = std::max(zmax, z[i]);
        T sum = T(0);
        for (int i = 0; i < n; ++i) {
            p[i] = std::exp(z[i] - zmax);
            sum += p[i];
        }
        for (int i = 0; i < n; ++i) p[i] /= sum;
    }
}

}  // namespace nn

// Policy/value network over stacked pixel observations. All parameters live
// in one flat vector (ordered conv1..conv3, fc, policy head, value head,
// weights before biases) so the optimizer, gradient clipping, checkpoints and
// finite-difference checks all see the same simple layout.
template <typename T>
class PolicyNet {
public:
    struct Cache {
        int batch = 0;
        std::vector<T> input;
        std::vector<T> col[3];    // im2col buffers
        std::vector<T> conv_out[3];  // post-relu
        std::vector<T> fc_out;       // post-relu
    };

    PolicyNet(const NetConfig& cfg, uint64_t seed) : cfg_(cfg) {
        int h = cfg.in_h, w = cfg.in_w, c = cfg.in_channels;
        for (int i = 0; i < 3; ++i) {
            conv_[i].configure(c, h, w, cfg.conv_channels[static_cast<size_t>(i)],
                               cfg.conv_kernels[static_cast<size_t>(i)],
                               cfg.conv_strides[static_cast<size_t>(i)]);
            c = conv_[i].out_c;
            h = conv_[i].out_h;
            w = conv_[i].out_w;
        }
        flat_size_ = static_cast<int>(conv_[2].out_size());
        fc_.configure(flat_size_, cfg.fc_width);
        policy_head_.configure(cfg.fc_width, cfg.n_actions);
        value_head_.configure(cfg.fc_width, 1);

        size_t total = 0;
        for (auto& cv : conv_) total += cv.weight_count() + static_cast<size_t>(cv.out_c);
        total += fc_.weight_count() + static_cast<size_t>(fc_.out);
        total += policy_head_.weight_count() + static_cast<size_t>(policy_head_.out);
        total += value_head_.weight_count() + static_cast<size_t>(value_head_.out);
        params_.assign(total, T(0));
        assign_offsets();

        SplitMix64 rng(mix_seed(seed, 0xE660));
        const double relu_gain = std::sqrt(2.0);
        for (int i = 0; i < 3; ++i) {
            nn::orthogonal_init(params_.data() + off_w_[i], conv_[i].out_c,
                                conv_[i].patch_size(), relu_gain, rng);
        }
        nn::orthogonal_init(params_.data() + off_w_[3], fc_.out, fc_.in, relu_gain, rng);
        nn::orthogonal_init(params_.data() + off_w_[4], policy_head_.out, policy_head_.in, 0.01,
                            rng);
        nn::orthogonal_init(params_.data() + off_w_[5], value_head_.out, value_head_.in, 1.0,
                            rng);
    }

    const NetConfig& config() const { return cfg_; }
    size_t param_count() const { return params_.size(); }
    std::vector<T>& params() { return params_; }
    const std::vector<T>& params() const { return params_; }
    size_t obs_size() const {
        return static_cast<size_t>(cfg_.in_channels) * cfg_.in_h * cfg_.in_w;
    }

    // logits: (batch x n_actions), values: (batch).
    void forward(const T* input, int batch, std::vector<T>& logits, std::vector<T>& values,
                 Cache* cache = nullptr) const {
        std::vector<T> ping, pong, col_local;
        const T* x = input;
        Cache local;
        Cache& cc = cache ? *cache : local;
        cc.batch = batch;
        if (cache) cc.input.assign(input, input + static_cast<size_t>(batch) * obs_size());

        for (int i = 0; i < 3; ++i) {
            std::vector<T>& col = cache ? cc.col[i] : col_local;
            // Alternating scratch buffers keep reads and writes disjoint.
            std::vector<T>& out = cache ? cc.conv_out[i] : (i % 2 == 0 ? ping : pong);
            out.resize(static_cast<size_t>(batch) * conv_[i].out_size());
            conv_[i].forward(x, batch, params_.data() + off_w_[i], params_.data() + off_b_[i],
                             out.data(), col);
            nn::relu_forward(out);
            x = out.data();
        }

        std::vector<T>& fc_out = cc.fc_out;
        fc_out.resize(static_cast<size_t>(batch) * fc_.out);
        fc_.forward(x, batch, params_.data() + off_w_[3], params_.data() + off_b_[3],
                    fc_out.data());
        nn::relu_forward(fc_out);

        logits.resize(static_cast<size_t>(batch) * cfg_.n_actions);
        policy_head_.forward(fc_out.data(), batch, params_.data() + off_w_[4],
                             params_.data() + off_b_[4], logits.data());
        values.resize(static_cast<size_t>(batch));
        value_head_.forward(fc_out.data(), batch, params_.data() + off_w_[5],
                            params_.data() + off_b_[5], values.data());
    }

    // Accumulates into grad (must be param_count zeros or an existing sum).
    void backward(const Cache& cache, const std::vector<T>& dlogits,
                  const std::vector<T>& dvalues, std::vector<T>& grad) const {
        const int batch = cache.batch;
        grad.resize(params_.size());

        std::vector<T> dfc(static_cast<size_t>(batch) * fc_.out, T(0));
        std::vector<T> dtmp(dfc.size());
        policy_head_.backward(cache.fc_out.data(), params_.data() + off_w_[4], dlogits.data(),
                              batch, grad.data() + off_w_[4], grad.data() + off_b_[4],
                              dtmp.data());
        for (size_t i = 0; i < dfc.size(); ++i) dfc[i] += dtmp[i];
        value_head_.backward(cache.fc_out.data(), params_.data() + off_w_[5], dvalues.data(),
                             batch, grad.data() + off_w_[5], grad.data() + off_b_[5],
                             dtmp.data());
        for (size_t i = 0; i < dfc.size(); ++i) dfc[i] += dtmp[i];
        nn::relu_backward(cache.fc_out, dfc);

        std::vector<T> dconv(static_cast<size_t>(batch) * conv_[2].out_size());
        fc_.backward(cache.conv_out[2].data(), params_.data() + off_w_[3], dfc.data(), batch,
                     grad.data() + off_w_[3], grad.data() + off_b_[3], dconv.data());

        for (int i = 2; i >= 0; --i) {
            nn::relu_backward(cache.conv_out[i], dconv);
            std::vector<T> dprev;
            T* dprev_ptr = nullptr;
            if (i > 0) {
                dprev.assign(static_cast<size_t>(batch) * conv_[i].in_size(), T(0));
                dprev_ptr = dprev.data();
            }
            conv_[i].backward(cache.col[i], params_.data() + off_w_[i], dconv.data(), batch,
                              grad.data() + off_w_[i], grad.data() + off_b_[i], dprev_ptr);
            if (i > 0) dconv = std::move(dprev);
        }
    }

    const nn::Conv2d<T>& conv(int i) const { return conv_[i]; }
    int flat_size() const { return flat_size_; }

private:
    void assign_offsets() {
        size_t at = 0;
        for (int i = 0; i < 3; ++i) {
            off_w_[i] = at;
            at += conv_[i].weight_count();
            off_b_[i] = at;
            at += static_cast<size_t>(conv_[i].out_c);
        }
        off_w_[3] = at;
        at += fc_.weight_count();
        off_b_[3] = at;
        at += static_cast<size_t>(fc_.out);
        off_w_[4] = at;
        at += policy_head_.weight_count();
        off_b_[4] = at;
        at += static_cast<size_t>(policy_head_.out);
        off_w_[5] = at;
        at += value_head_.weight_count();
        off_b_[5] = at;
        at += static_cast<size_t>(value_head_.out);
    }

    NetConfig cfg_;
    nn::Conv2d<T> conv_[3];
    nn::Linear<T> fc_, policy_head_, value_head_;
    int flat_size_ = 0;
    std::vector<T> params_;
    size_t off_w_[6] = {0}, off_b_[6] = {0};
};

}  // namespace egogrid
