#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pyrage/corpus.hpp"
#include "pyrage/layers.hpp"

namespace pyrage::backbones {

/// Four feature maps with channels (64,128,256,512) and spatial sizes
/// (H, H/2, H/4, H/8).
template <class T>
struct FeaturePyramid {
    std::array<Tensor<T>, 4> levels;
};

/// Ten-convolution age feature extractor. Taps after convolutions 2, 4, 7
/// and 10 (post-activation) feed the discriminator pathways; a pooled
/// classifier head exists only for pretraining and is excluded from
/// checkpoints saved as frozen feature extractors.
template <class T>
class AgeExtractor {
public:
    AgeExtractor();
    void init(std::uint64_t seed);

    FeaturePyramid<T> forward(const Tensor<T>& x, bool train);
    /// Input gradient given gradients at the four taps; parameter gradients
    /// accumulate only when accumulate_param_grads is set.
    Tensor<T> backward(const FeaturePyramid<T>& grads, bool accumulate_param_grads);

    /// Pretraining head: logits over age clusters from the deepest tap.
    Tensor<T> head_forward(const Tensor<T>& level4, bool train);
    void head_backward(const Tensor<T>& dlogits);
    /// Gradient w.r.t. the deepest tap produced by head_backward; feed it
    /// into backward() through the level-4 slot.
    Tensor<T> take_head_grad() { return std::move(head_grad_level4_); }

    void collect_params(std::vector<nn::Param<T>>& out, bool include_head);
    void collect_buffers(std::vector<nn::Param<T>>& out);
    std::uint64_t params_hash();

    static constexpr int kNumClasses = 4;  // source cluster + 3 targets
    static constexpr std::array<int, 4> kTapChannels = {64, 128, 256, 512};

private:
    nn::Sequential<T> body_;
    std::array<int, 4> tap_layer_;  // indices into body_ (post-ReLU)
    nn::GlobalAvgPool<T> head_pool_;
    nn::Linear<T> head_{512, kNumClasses};
    Tensor<T> head_grad_level4_;
};

/// Ten-convolution identity embedding network; the embedding is the final
/// convolution's activation map.
template <class T>
class IdentityNet {
public:
    IdentityNet();
    void init(std::uint64_t seed, int n_classes);

    Tensor<T> embed(const Tensor<T>& x, bool train);
    Tensor<T> backward(const Tensor<T>& dembed, bool accumulate_param_grads);

    Tensor<T> head_forward(const Tensor<T>& embedding, bool train);
    void head_backward(const Tensor<T>& dlogits);
    Tensor<T> take_head_grad() { return std::move(head_grad_embed_); }

    void collect_params(std::vector<nn::Param<T>>& out, bool include_head);
    void collect_buffers(std::vector<nn::Param<T>>& out);
    std::uint64_t params_hash();

    static constexpr int kEmbedChannels = 128;

private:
    nn::Sequential<T> body_;
    nn::GlobalAvgPool<T> head_pool_;
    std::unique_ptr<nn::Linear<T>> head_;
    Tensor<T> head_grad_embed_;
};

struct PretrainConfig {
    int iterations = 300;
    int batch_size = 8;
    double lr = 1e-3;
    std::uint64_t seed = 1;
    int val_fold = 4;
    int max_val_images = 200;
};

struct PretrainMetrics {
    double initial_val_loss = 0;
    double final_val_loss = 0;
    double final_train_loss = 0;
    double val_accuracy = 0;       // age extractor: held-out cluster accuracy
    double intra_distance = 0;     // identity net: same-identity embedding distance
    double inter_distance = 0;     // identity net: cross-identity embedding distance
};

/// Trains the cluster-classification task and freezes the features;
/// divergence (non-finite loss) aborts with a diagnostic.
PretrainMetrics pretrain_age_extractor(const corpus::Dataset& ds, const PretrainConfig& cfg,
                                       AgeExtractor<float>& net);

PretrainMetrics pretrain_identity_net(const corpus::Dataset& ds, const PretrainConfig& cfg,
                                      IdentityNet<float>& net);

/// Checkpoint container: <prefix>.bin tensor blob + <prefix>.json metadata.
void save_age_extractor(const std::string& prefix, AgeExtractor<float>& net,
                        const PretrainMetrics& metrics, const PretrainConfig& cfg);
void load_age_extractor(const std::string& prefix, AgeExtractor<float>& net);
void save_identity_net(const std::string& prefix, IdentityNet<float>& net,
                       const PretrainMetrics& metrics, const PretrainConfig& cfg);
void load_identity_net(const std::string& prefix, IdentityNet<float>& net);

/// Reads an image from disk when present, else re-renders from its spec.
Tensor<float> dataset_image(const corpus::Dataset& ds, int index);

}  // namespace pyrage::backbones
