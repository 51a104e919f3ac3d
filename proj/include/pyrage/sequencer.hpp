#pragma once

#include <string>
#include <vector>

#include "pyrage/trainer.hpp"

namespace pyrage::sequencer {

/// A checkpoint loaded for inference.
struct LoadedModel {
    trainer::Models models;
    trainer::TrainConfig config;
};

LoadedModel load_model(const std::string& ckpt_dir);

/// Condition weights of an n-frame piecewise-linear path
/// one-hot(1) -> one-hot(2) -> ... -> one-hot(k). Every row is nonnegative,
/// sums to 1, and has at most two nonzero channels.
std::vector<std::vector<double>> sequence_conditions(int k, int n);

/// One-step aging of a (3,H,W) image toward a target cluster in [1,k].
Tensor<float> age_progress(const Tensor<float>& x, int cluster, LoadedModel& m);

/// n frames along the condition path; n >= 2.
std::vector<Tensor<float>> aging_sequence(const Tensor<float>& x, int n, LoadedModel& m);

/// Old -> young synthesis; rejects checkpoints trained for the aging
/// direction via their metadata.
Tensor<float> rejuvenate(const Tensor<float>& x, LoadedModel& m);

/// Frames concatenated horizontally into one strip image.
Tensor<float> hstrip(const std::vector<Tensor<float>>& frames);

}  // namespace pyrage::sequencer
