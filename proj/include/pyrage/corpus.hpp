#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pyrage/tensor.hpp"

namespace pyrage::corpus {

/// Ground-truth parameters of one synthetic face. Rendering is a pure
/// function of this struct.
struct FaceSpec {
    std::uint64_t identity_seed = 0;
    double age = 30.0;         // years, [16, 77]
    double pose = 0.0;         // [-1, 1], horizontal shear proxy
    double expression = 0.0;   // [-1, 1], mouth-curve proxy
    std::uint64_t noise_seed = 0;
};

constexpr double kAgeMin = 16.0;
constexpr double kAgeMax = 77.0;

/// Aging controls. All strictly monotone affine in age and exactly
/// invertible; the evaluation oracle relies on these constants.
struct AgingModel {
    static constexpr double wrinkle_amp = 0.25;     // [0,1] luminance units at age 77
    static constexpr double wrinkle_period = 1.0 / 16.0;  // fraction of image height
    static constexpr double hair_floor = 0.2;       // density at age 77 is 1 - 0.8
    static constexpr double hair_tone = 0.12;
    static constexpr double scalp_tone = 0.82;
    static constexpr double sag_gain = 0.10;

    // Fixed measurement regions, normalized image coordinates [0,1).
    static constexpr double wrinkle_u0 = 0.34, wrinkle_u1 = 0.66;
    static constexpr double wrinkle_v0 = 0.30, wrinkle_v1 = 0.42;
    static constexpr double hair_u0 = 0.30, hair_u1 = 0.70;
    static constexpr double hair_v0 = 0.04, hair_v1 = 0.13;

    static double wrinkle_of_age(double age) { return (age - kAgeMin) / (kAgeMax - kAgeMin); }
    static double hair_of_age(double age) { return 1.0 - 0.8 * wrinkle_of_age(age); }
    static double age_of_wrinkle(double w) { return kAgeMin + (kAgeMax - kAgeMin) * w; }
    static double age_of_hair(double h) { return kAgeMin + (kAgeMax - kAgeMin) * (1.0 - h) / 0.8; }
};

/// Age cluster index: 0 = source pool (<= 30), then decade bins, 3 = 51+.
int bin_age(double age);
constexpr int kNumTargetClusters = 3;

/// Deterministic render, pixels (3, size, size) in [-1, 1]. size in {64, 224}.
Tensor<float> render_face(const FaceSpec& spec, int size);

/// Spatial broadcast of target-age channel weights: (k, size, size).
/// Weights must lie in [0,1] and sum to 1 within 1e-6.
Tensor<float> encode_condition(const std::vector<double>& weights, int size);

struct Record {
    FaceSpec spec;
    int cluster = 0;
    int fold = 0;
    std::string path;  // relative to the dataset root
};

struct Dataset {
    std::string root;
    int image_size = 64;
    std::uint64_t seed = 0;
    std::vector<Record> records;

    std::vector<int> young_pool() const;               // indices with cluster 0
    std::vector<int> old_pool(int cluster) const;      // indices with cluster 1..3
    std::vector<int> fold_indices(int fold) const;
    Tensor<float> load_image(int index) const;
    Tensor<float> render(int index) const;  // re-render instead of reading the PNG
};

/// Generates images + manifest under out_dir. Re-running with identical
/// arguments reproduces the manifest byte-for-byte.
Dataset make_dataset(int n_identities, int images_per_identity, std::uint64_t seed,
                     const std::string& out_dir, int image_size = 64,
                     bool write_images = true);

Dataset load_dataset(const std::string& root);

std::string manifest_json(const Dataset& ds);

}  // namespace pyrage::corpus
