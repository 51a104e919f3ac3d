#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pyrage/tensor.hpp"

namespace pyrage::nn {

template <class T>
struct Param {
    std::string name;
    Tensor<T>* value;
    Tensor<T>* grad;  // null for buffers (running statistics)
};

enum class PadMode { Zero, Reflect };

/// One differentiable layer. forward() caches whatever backward() needs;
/// backward() consumes the upstream gradient, accumulates parameter
/// gradients, and returns the input gradient (empty when input_grad is off).
template <class T>
class Layer {
public:
    virtual ~Layer() = default;
    virtual Tensor<T> forward(const Tensor<T>& x, bool train) = 0;
    virtual Tensor<T> backward(const Tensor<T>& dy) = 0;
    virtual void collect_params(const std::string& prefix, std::vector<Param<T>>& out) {}
    virtual void collect_buffers(const std::string& prefix, std::vector<Param<T>>& out) {}

    bool input_grad = true;
    bool param_grad = true;
};

template <class T>
class Conv2d final : public Layer<T> {
public:
    Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad,
           PadMode mode = PadMode::Zero);

    void init(std::mt19937_64& rng);
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) override;

    static int out_size(int in, int kernel, int stride, int pad) {
        return (in + 2 * pad - kernel) / stride + 1;
    }

    int in_ch, out_ch, kernel, stride, pad;
    PadMode mode;
    Tensor<T> w, b, dw, db;  // w: (out_ch, in_ch*k*k)

private:
    Tensor<T> x_;  // cached input
    std::vector<T> col_;
};

template <class T>
class ConvTranspose2d final : public Layer<T> {
public:
    ConvTranspose2d(int in_ch, int out_ch, int kernel, int stride, int pad, int out_pad);

    void init(std::mt19937_64& rng);
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) override;

    static int out_size(int in, int kernel, int stride, int pad, int out_pad) {
        return (in - 1) * stride - 2 * pad + kernel + out_pad;
    }

    int in_ch, out_ch, kernel, stride, pad, out_pad;
    Tensor<T> w, b, dw, db;  // w: (in_ch, out_ch*k*k)

private:
    Tensor<T> x_;
    std::vector<T> col_;
};

template <class T>
class BatchNorm2d final : public Layer<T> {
public:
    explicit BatchNorm2d(int channels, T momentum = T(0.1), T eps = T(1e-5));

    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) override;
    void collect_buffers(const std::string& prefix, std::vector<Param<T>>& out) override;

    int channels;
    T momentum, eps;
    Tensor<T> gamma, beta, dgamma, dbeta;
    Tensor<T> running_mean, running_var;

private:
    bool train_mode_ = true;
    Tensor<T> xhat_;
    std::vector<T> invstd_;
};

template <class T>
class InstanceNorm2d final : public Layer<T> {
public:
    explicit InstanceNorm2d(int channels, T eps = T(1e-5));

    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) override;

    int channels;
    T eps;
    Tensor<T> gamma, beta, dgamma, dbeta;

private:
    Tensor<T> xhat_;
    std::vector<T> invstd_;  // per (n, c)
};

template <class T>
class ReLU final : public Layer<T> {
public:
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;

private:
    std::vector<unsigned char> mask_;
};

template <class T>
class LeakyReLU final : public Layer<T> {
public:
    explicit LeakyReLU(T slope) : slope(slope) {}
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;

    T slope;

private:
    std::vector<unsigned char> mask_;
};

template <class T>
class Tanh final : public Layer<T> {
public:
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;

private:
    Tensor<T> y_;
};

template <class T>
class MaxPool2d final : public Layer<T> {
public:
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;

private:
    std::vector<int> shape_;
    std::vector<std::size_t> argmax_;
};

template <class T>
class Linear final : public Layer<T> {
public:
    Linear(int in_dim, int out_dim);

    void init(std::mt19937_64& rng);
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) override;

    int in_dim, out_dim;
    Tensor<T> w, b, dw, db;  // w: (out_dim, in_dim)

private:
    Tensor<T> x_;
};

template <class T>
class GlobalAvgPool final : public Layer<T> {
public:
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;

private:
    std::vector<int> shape_;
};

/// Layer chain with shared forward/backward plumbing. Owns its layers.
template <class T>
class Sequential {
public:
    template <class L, class... Args>
    L* add(Args&&... args) {
        auto l = std::make_unique<L>(std::forward<Args>(args)...);
        L* raw = l.get();
        layers_.push_back(std::move(l));
        return raw;
    }

    Tensor<T> forward(const Tensor<T>& x, bool train) {
        Tensor<T> y = x;
        for (auto& l : layers_) y = l->forward(y, train);
        return y;
    }

    Tensor<T> backward(const Tensor<T>& dy) {
        Tensor<T> g = dy;
        for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) g = (*it)->backward(g);
        return g;
    }

    void collect_params(const std::string& prefix, std::vector<Param<T>>& out) {
        for (std::size_t i = 0; i < layers_.size(); ++i)
            layers_[i]->collect_params(prefix + "." + std::to_string(i), out);
    }
    void collect_buffers(const std::string& prefix, std::vector<Param<T>>& out) {
        for (std::size_t i = 0; i < layers_.size(); ++i)
            layers_[i]->collect_buffers(prefix + "." + std::to_string(i), out);
    }

    std::size_t size() const { return layers_.size(); }
    Layer<T>* at(std::size_t i) { return layers_.at(i).get(); }

private:
    std::vector<std::unique_ptr<Layer<T>>> layers_;
};

/// Softmax cross-entropy over (N, K) logits; returns mean loss and writes
/// dlogits (already divided by N).
template <class T>
T softmax_cross_entropy(const Tensor<T>& logits, const std::vector<int>& targets,
                        Tensor<T>* dlogits);

}  // namespace pyrage::nn
