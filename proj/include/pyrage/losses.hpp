#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pyrage/tensor.hpp"

namespace pyrage::losses {

/// Trade-off weights of the total generator objective.
struct LossWeights {
    double lambda_p = 0.10;
    double lambda_a = 1000.00;
    double lambda_i = 0.005;
    double lambda_t = 1e-6;
};

struct LossReport {
    std::vector<double> gan_g;  // per target cluster
    std::vector<double> gan_d;  // per target cluster
    double identity = 0.0;
    double pixel = 0.0;
    double tv = 0.0;
    double total_g = 0.0;
    bool pixel_active = false;
};

template <class T>
inline void check_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* who) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(who) + ": shape mismatch " + a.shape_str() +
                                    " vs " + b.shape_str());
}

/// Mean over entries of (score - target)^2.
template <class T>
T least_squares_distance(const Tensor<T>& scores, const Tensor<T>& target) {
    check_same_shape(scores, target, "least_squares_distance");
    double s = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double d = static_cast<double>(scores.data[i]) - target.data[i];
        s += d * d;
    }
    return static_cast<T>(s / static_cast<double>(scores.size()));
}

/// d/dscores of least_squares_distance, scaled by an outer factor.
template <class T>
Tensor<T> least_squares_distance_grad(const Tensor<T>& scores, const Tensor<T>& target,
                                      T outer = T(1)) {
    check_same_shape(scores, target, "least_squares_distance_grad");
    Tensor<T> g(scores.shape);
    const T scale = outer * T(2) / static_cast<T>(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        g.data[i] = scale * (scores.data[i] - target.data[i]);
    return g;
}

template <class T>
Tensor<T> constant_like(const Tensor<T>& t, T value) {
    return Tensor<T>(t.shape, value);
}

/// Generator-side adversarial term: distance of fake scores to the all-ones
/// label grid.
template <class T>
T gan_g_loss_i(const Tensor<T>& fake_scores) {
    for (T v : fake_scores.data)
        if (!std::isfinite(static_cast<double>(v)))
            throw std::invalid_argument("gan_g_loss_i: non-finite score");
    return least_squares_distance(fake_scores, constant_like(fake_scores, T(1)));
}

/// Discriminator-side term: real elderly toward 1, generated and actual
/// young toward 0, averaged over the three terms.
template <class T>
T gan_d_loss_i(const Tensor<T>& real_old, const Tensor<T>& fake, const Tensor<T>& young) {
    check_same_shape(real_old, fake, "gan_d_loss_i");
    check_same_shape(real_old, young, "gan_d_loss_i");
    const T a = least_squares_distance(real_old, constant_like(real_old, T(1)));
    const T b = least_squares_distance(fake, constant_like(fake, T(0)));
    const T c = least_squares_distance(young, constant_like(young, T(0)));
    return (a + b + c) / T(3);
}

/// Cross-entropy of softmax(logits) against the one-hot cluster label.
template <class T>
T classification_term(const std::vector<T>& logits, int true_cluster) {
    const int k = static_cast<int>(logits.size());
    if (true_cluster < 1 || true_cluster > k)
        throw std::invalid_argument("classification_term: cluster index outside [1,k]");
    T mx = logits[0];
    for (T v : logits) mx = std::max(mx, v);
    double z = 0;
    for (T v : logits) z += std::exp(static_cast<double>(v - mx));
    return static_cast<T>(std::log(z) -
                          static_cast<double>(logits[static_cast<std::size_t>(true_cluster - 1)] - mx));
}

/// Auxiliary-classifier terms: each side pairs its own adversarial
/// least-squares distance (target 1 for the sample it scores) with the
/// cross-entropy of the cluster logits. The trainer adds the fake-toward-0
/// half of the discriminator objective separately.
template <class T>
std::pair<T, T> acgan_losses(const Tensor<T>& d_scores, const std::vector<T>& class_logits,
                             int true_cluster) {
    const T adv = least_squares_distance(d_scores, constant_like(d_scores, T(1)));
    const T cls = classification_term(class_logits, true_cluster);
    return {adv + cls, adv + cls};
}

/// Mean over elements of the squared embedding difference.
template <class T>
T mean_squared_distance(const Tensor<T>& a, const Tensor<T>& b) {
    check_same_shape(a, b, "mean_squared_distance");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        s += d * d;
    }
    return static_cast<T>(s / static_cast<double>(a.size()));
}

/// Squared L2 difference normalized by W*H*C.
template <class T>
T pixel_loss(const Tensor<T>& x, const Tensor<T>& y) {
    return mean_squared_distance(x, y);
}

template <class T>
Tensor<T> pixel_loss_grad(const Tensor<T>& x, const Tensor<T>& y, T outer = T(1)) {
    // d/dx of pixel_loss(x, y)
    return least_squares_distance_grad(x, y, outer);
}

/// Anisotropic total variation: summed first-difference magnitudes over all
/// channels, normalized by pixel count.
template <class T>
T tv_loss(const Tensor<T>& img) {
    if (img.ndim() != 3) throw std::invalid_argument("tv_loss: expected (C,H,W)");
    const int c = img.dim(0), h = img.dim(1), w = img.dim(2);
    const std::size_t plane = static_cast<std::size_t>(h) * w;
    double s = 0;
    for (int ch = 0; ch < c; ++ch) {
        const T* p = img.ptr() + ch * plane;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x + 1 < w; ++x)
                s += std::abs(static_cast<double>(p[y * w + x + 1]) - p[y * w + x]);
        for (int y = 0; y + 1 < h; ++y)
            for (int x = 0; x < w; ++x)
                s += std::abs(static_cast<double>(p[(y + 1) * w + x]) - p[y * w + x]);
    }
    return static_cast<T>(s / static_cast<double>(plane));
}

template <class T>
Tensor<T> tv_loss_grad(const Tensor<T>& img, T outer = T(1)) {
    const int c = img.dim(0), h = img.dim(1), w = img.dim(2);
    const std::size_t plane = static_cast<std::size_t>(h) * w;
    Tensor<T> g(img.shape, T(0));
    const T scale = outer / static_cast<T>(plane);
    auto sgn = [](T d) { return d > T(0) ? T(1) : (d < T(0) ? T(-1) : T(0)); };
    for (int ch = 0; ch < c; ++ch) {
        const T* p = img.ptr() + ch * plane;
        T* gp = g.ptr() + ch * plane;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x + 1 < w; ++x) {
                const T s = sgn(p[y * w + x + 1] - p[y * w + x]);
                gp[y * w + x + 1] += scale * s;
                gp[y * w + x] -= scale * s;
            }
        for (int y = 0; y + 1 < h; ++y)
            for (int x = 0; x < w; ++x) {
                const T s = sgn(p[(y + 1) * w + x] - p[y * w + x]);
                gp[(y + 1) * w + x] += scale * s;
                gp[y * w + x] -= scale * s;
            }
    }
    return g;
}

/// Weighted sum of the generator objective; the per-discriminator objective
/// is its adversarial term alone.
inline double total_g_loss(const LossReport& parts, const LossWeights& w) {
    double adv = 0;
    for (double v : parts.gan_g) {
        if (!std::isfinite(v)) throw std::invalid_argument("total_g_loss: non-finite gan term");
        adv += v;
    }
    if (!std::isfinite(parts.pixel) || !std::isfinite(parts.identity) || !std::isfinite(parts.tv))
        throw std::invalid_argument("total_g_loss: non-finite part");
    return w.lambda_a * adv + w.lambda_p * parts.pixel + w.lambda_i * parts.identity +
           w.lambda_t * parts.tv;
}

/// One CSV row per iteration; formatting is pinned so seeded re-runs
/// reproduce the file byte-for-byte.
std::string loss_csv_header(int k);
std::string loss_csv_row(long long iteration, double lr, const LossReport& r);

}  // namespace pyrage::losses
