#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pyrage/backbones.hpp"
#include "pyrage/layers.hpp"

namespace pyrage::gan {

/// Discriminator wiring variants.
enum class Scheme {
    kSingleD,          // one unconditional discriminator
    kAcgan,            // one discriminator + auxiliary cluster classifier
    kKLogit,           // one discriminator with k-channel score grids
    kKDiscriminators,  // k class-wise discriminators (default)
};

Scheme scheme_from_string(const std::string& s);
std::string scheme_to_string(Scheme s);

/// Residual block: two 3x3 convolutions with instance norm, ReLU between,
/// identity skip. Zero weights give the identity map.
template <class T>
class ResidualBlock final : public nn::Layer<T> {
public:
    explicit ResidualBlock(int channels);
    void init(std::mt19937_64& rng);
    Tensor<T> forward(const Tensor<T>& x, bool train) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(const std::string& prefix, std::vector<nn::Param<T>>& out) override;

private:
    nn::Sequential<T> f_;
};

/// Encoder / residual / decoder generator. Consumes the image stacked with
/// k constant condition planes and emits a tanh image of the input size.
template <class T>
class Generator {
public:
    explicit Generator(int k = 3);
    void init(std::uint64_t seed);

    /// x: (N, 3, H, W) in [-1, 1]; cond: N*k condition weights, each row
    /// in the target simplex.
    Tensor<T> forward(const Tensor<T>& x, const std::vector<double>& cond, bool train);
    /// Input gradient (the 3 image channels only).
    Tensor<T> backward(const Tensor<T>& dy);

    void collect_params(std::vector<nn::Param<T>>& out);
    std::uint64_t params_hash();
    void set_param_grads(bool enabled);

    int k() const { return k_; }

private:
    int k_;
    nn::Sequential<T> net_;
};

/// One multi-pathway score network over a frozen feature pyramid. Pathways
/// read the pyramid coarse-to-fine with depths 3/4/5/6; every convolution
/// is 4x4 stride 2 pad 1 with batch norm + leaky ReLU except the final
/// score convolution. Pathway outputs share their width and concatenate
/// vertically into one grid.
template <class T>
class Discriminator {
public:
    /// score_channels is 1 except for the k-logit variant; with_classifier
    /// adds parallel k-channel heads pooled into cluster logits.
    /// num_pathways < 4 keeps only the deepest pathways (the one-pathway
    /// ablation uses num_pathways = 1).
    Discriminator(int score_channels = 1, bool with_classifier = false, int k = 3,
                  int num_pathways = 4);
    void init(std::uint64_t seed);

    Tensor<T> forward(const backbones::FeaturePyramid<T>& pyr, bool train);
    backbones::FeaturePyramid<T> backward(const Tensor<T>& dgrid);

    /// Classifier logits (N, k) from the most recent forward; valid only
    /// when built with_classifier.
    Tensor<T> class_logits() const;
    /// Adds the classifier branch's contribution; call before backward().
    void class_backward(const Tensor<T>& dlogits);

    void collect_params(std::vector<nn::Param<T>>& out);
    void collect_buffers(std::vector<nn::Param<T>>& out);
    std::uint64_t params_hash();
    void set_param_grads(bool enabled);
    void set_train_inputs(bool enabled);  // toggle pyramid input gradients

    /// Grid rows/cols for an input image of the given size.
    static std::pair<int, int> grid_shape(int image_size, int num_pathways = 4);

private:
    int score_channels_, k_, num_pathways_;
    bool with_classifier_;
    std::array<nn::Sequential<T>, 4> path_;
    nn::Sequential<T> cls_;                      // classifier head over the deepest level
    std::array<std::vector<int>, 4> out_shape_;  // cached per-pathway grid shapes
    Tensor<T> cls_logits_;
    Tensor<T> cls_grad_;  // pending classifier input gradient (deepest level)
};

/// Builds the constant label grid a score grid is regressed toward.
template <class T>
Tensor<T> make_label_grid(const std::vector<int>& grid_shape, T value);

/// One-hot channel target for the k-logit variant: channel (cluster-1) is
/// `value`, the rest 0.
template <class T>
Tensor<T> make_klogit_grid(const std::vector<int>& grid_shape, int cluster, T value);

template <class T>
struct GanModels {
    Generator<T> g;
    std::vector<Discriminator<T>> d;  // size k, or 1 for single-network schemes
    Scheme scheme = Scheme::kKDiscriminators;
};

/// Instantiates generator + discriminators for a scheme with deterministic
/// per-network seeds. num_pathways < 4 selects the one-pathway ablation.
template <class T>
GanModels<T> make_models(Scheme scheme, int k, std::uint64_t seed, int num_pathways = 4);

}  // namespace pyrage::gan
