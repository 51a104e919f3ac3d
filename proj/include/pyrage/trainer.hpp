#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pyrage/adam.hpp"
#include "pyrage/backbones.hpp"
#include "pyrage/corpus.hpp"
#include "pyrage/gan.hpp"
#include "pyrage/losses.hpp"

namespace pyrage::trainer {

struct TrainConfig {
    gan::Scheme scheme = gan::Scheme::kKDiscriminators;
    int k = 3;
    int resolution = 64;
    int batch_size = 4;
    long long total_iterations = 20000;
    double learning_rate = 1e-4;
    double lr_decay_factor = 0.5;
    long long lr_decay_every = 2000;
    int pixel_critic_period = 15;
    losses::LossWeights weights;
    std::uint64_t seed = 1;
    /// Update one discriminator per iteration, cycling, instead of all k.
    bool cycle_discriminators = false;
    /// Discriminator pathways kept, deepest first; 1 = one-pathway ablation.
    int num_pathways = 4;
    bool rejuvenation = false;  // old -> young with a single discriminator
    long long snapshot_every = 5000;
    std::string run_name = "run";
    std::string run_root = "runs";
    std::string age_backbone;  // checkpoint prefix of the frozen extractors
    std::string id_backbone;
    int val_fold = 4;
    /// Cache frozen feature pyramids / identity embeddings of the pools.
    bool cache_features = true;
    double max_cache_gb = 2.5;
};

void validate(const TrainConfig& cfg);
std::string config_json(const TrainConfig& cfg);
TrainConfig config_from_json(const std::string& text);

/// Generator, discriminators and the frozen extractors they score against.
struct Models {
    gan::GanModels<float> gan;
    backbones::AgeExtractor<float> age;
    backbones::IdentityNet<float> id;
};

struct TrainState {
    long long iteration = 0;  // completed iterations; rows log iteration+1
    std::mt19937_64 rng;
    std::unique_ptr<Adam<float>> g_opt;
    std::vector<std::unique_ptr<Adam<float>>> d_opts;
};

/// One optimization step's inputs: a young source batch plus one real batch
/// per target cluster, all (B, 3, H, W).
struct Batch {
    Tensor<float> young;
    std::vector<Tensor<float>> old_by_cluster;
    /// Pre-extracted pyramids of the real batches (optional cache path);
    /// empty levels mean "compute from the images".
    std::vector<backbones::FeaturePyramid<float>> old_pyramids;
    backbones::FeaturePyramid<float> young_pyramid;
    Tensor<float> young_id_embedding;
};

struct SchemeWiring {
    int num_discriminators;
    int score_channels;
    bool with_classifier;
};

/// Resolves the adversarial wiring for a scheme.
SchemeWiring select_scheme(const TrainConfig& cfg);

/// Fresh models for a config: generator + discriminators per wiring, frozen
/// backbones loaded from cfg's checkpoint prefixes (or left initialized
/// when the prefixes are empty, for tests).
Models make_models(const TrainConfig& cfg);
TrainState make_state(const TrainConfig& cfg, Models& m);

/// One alternating update: discriminator phase on the real/fake/young
/// triplets, then a generator phase pairing the young batch with every
/// target cluster. The pixel critic joins only when the generator
/// iteration (1-based) is divisible by pixel_critic_period.
losses::LossReport train_step(const Batch& batch, Models& m, TrainState& st,
                              const TrainConfig& cfg);

struct TrainResult {
    std::string checkpoint_dir;  // final snapshot
    std::string loss_csv_path;
    losses::LossReport last;
};

/// Full run over a corpus: pool construction, feature caching, loss CSV,
/// periodic + final checkpoints under <run_root>/<run_name>/.
/// When resume_from is non-empty, restarts from that checkpoint and appends
/// to the existing CSV, reproducing the uninterrupted trajectory.
TrainResult train(const corpus::Dataset& ds, const TrainConfig& cfg,
                  const std::string& resume_from = "");

/// Old -> young training: roles swapped, scheme forced to single_d, k=1.
TrainResult train_rejuvenation(const corpus::Dataset& ds, TrainConfig cfg);

/// Checkpoint directory layout: <dir>/model.bin, <dir>/optim.bin,
/// <dir>/state.json. Writes are atomic (write-then-rename).
void save_checkpoint(const std::string& dir, Models& m, TrainState& st, const TrainConfig& cfg);
/// Loads config + models; st may be null for inference-only use.
TrainConfig load_checkpoint(const std::string& dir, Models& m, TrainState* st);
/// Reads just the config/metadata of a checkpoint.
TrainConfig peek_checkpoint(const std::string& dir);

}  // namespace pyrage::trainer
