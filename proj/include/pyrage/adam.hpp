#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pyrage/layers.hpp"

namespace pyrage {

/// Adam over a fixed parameter list. Moments are addressed positionally, so
/// the list must be collected in the same order on every construction (the
/// registries guarantee that).
template <class T>
class Adam {
public:
    explicit Adam(std::vector<nn::Param<T>> params, T beta1 = T(0.9), T beta2 = T(0.999),
                  T eps = T(1e-8))
        : params_(std::move(params)), beta1_(beta1), beta2_(beta2), eps_(eps) {
        m_.resize(params_.size());
        v_.resize(params_.size());
        for (std::size_t i = 0; i < params_.size(); ++i) {
            m_[i] = Tensor<T>(params_[i].value->shape);
            v_[i] = Tensor<T>(params_[i].value->shape);
        }
    }

    void zero_grad() {
        for (auto& p : params_) p.grad->zero();
    }

    void step(T lr) {
        ++t_;
        const double bc1 = 1.0 - std::pow(static_cast<double>(beta1_), t_);
        const double bc2 = 1.0 - std::pow(static_cast<double>(beta2_), t_);
        for (std::size_t i = 0; i < params_.size(); ++i) {
            T* w = params_[i].value->ptr();
            const T* g = params_[i].grad->ptr();
            T* m = m_[i].ptr();
            T* v = v_[i].ptr();
            const std::size_t n = params_[i].value->size();
            for (std::size_t j = 0; j < n; ++j) {
                m[j] = beta1_ * m[j] + (T(1) - beta1_) * g[j];
                v[j] = beta2_ * v[j] + (T(1) - beta2_) * g[j] * g[j];
                const T mh = static_cast<T>(m[j] / bc1);
                const T vh = static_cast<T>(v[j] / bc2);
                w[j] -= lr * mh / (std::sqrt(vh) + eps_);
            }
        }
    }

    long long step_count() const { return t_; }
    void set_step_count(long long t) { t_ = t; }

    std::vector<nn::Param<T>> state_tensors() {
        std::vector<nn::Param<T>> out;
        for (std::size_t i = 0; i < params_.size(); ++i) {
            out.push_back({params_[i].name + ".adam_m", &m_[i], nullptr});
            out.push_back({params_[i].name + ".adam_v", &v_[i], nullptr});
        }
        return out;
    }

private:
    std::vector<nn::Param<T>> params_;
    std::vector<Tensor<T>> m_, v_;
    T beta1_, beta2_, eps_;
    long long t_ = 0;
};

/// Step decay: lr(i) = lr0 * factor^floor(i / every).
inline double decayed_lr(double lr0, double factor, long long every, long long iter) {
    if (every <= 0) return lr0;
    return lr0 * std::pow(factor, static_cast<double>(iter / every));
}

}  // namespace pyrage
