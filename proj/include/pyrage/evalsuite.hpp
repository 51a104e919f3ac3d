#pragma once

#include <string>
#include <vector>

#include "pyrage/corpus.hpp"
#include "pyrage/sequencer.hpp"
#include "pyrage/trainer.hpp"

namespace pyrage::evalsuite {

/// Inverts the rendering controls of a (3,H,W) synthetic face: wrinkle-band
/// second-difference energy and hair-band darkness, each mapped back to
/// years through the aging model's affine laws, averaged and clipped to the
/// corpus age range. Deterministic and model-free.
double oracle_estimate_age(const Tensor<float>& img);

/// The two raw measurements, exposed for calibration tests.
double oracle_wrinkle_measure(const Tensor<float>& img);  // recovered w in [0,1]-ish
double oracle_hair_measure(const Tensor<float>& img);     // recovered density

struct VerifierCalibration {
    double midpoint = 0;    // embedding distance mapped to confidence 50
    double scale = 0;       // sigmoid steepness (per distance unit)
    double threshold = 0;   // verification threshold, FAR-quantile analog
    double intra_mean = 0;  // mean same-identity distance (held-out)
    double inter_mean = 0;  // mean cross-identity distance (held-out)
    double margin = 0;      // mean intra minus inter confidence
    int impostor_pairs = 0;  // FAR resolution caveat: ~1/impostor_pairs
};

/// Fixes the sigmoid mapping and threshold once, on a held-out fold.
VerifierCalibration calibrate_verifier(const corpus::Dataset& ds,
                                       backbones::IdentityNet<float>& idnet, int fold,
                                       int max_images = 120);

/// Confidence in [0,100] that two images show one identity; symmetric.
double oracle_verify(const Tensor<float>& a, const Tensor<float>& b,
                     backbones::IdentityNet<float>& idnet, const VerifierCalibration& cal);

/// Mean with both std conventions: over all samples and over the 5 fold
/// means.
struct ClusterStat {
    double mean = 0;
    double std_all = 0;
    double std_folds = 0;
    int count = 0;
};

ClusterStat cluster_stat(const std::vector<double>& values, const std::vector<int>& folds);

struct MetricsReport {
    std::string scheme;
    std::string label;
    std::vector<ClusterStat> synth_age;    // per target cluster
    std::vector<ClusterStat> natural_age;  // benchmark, per target cluster
    std::vector<double> gap;               // |synth mean - natural mean|
    std::vector<ClusterStat> conf_test_aged;   // [test, aged i]
    std::vector<ClusterStat> conf_aged_pairs;  // [aged i, aged j], i<j
    std::vector<double> verification_rate;     // per aged cluster
    double threshold = 0;
};

/// Natural-face oracle means per target cluster over a dataset (the Table
/// benchmark column analog). Fold-aware stds.
std::vector<ClusterStat> natural_benchmark(const corpus::Dataset& ds);

/// Young probe indices of a fold (all folds when fold < 0), capped.
std::vector<int> probe_set(const corpus::Dataset& ds, int fold, int max_probes);

MetricsReport eval_aging_accuracy(sequencer::LoadedModel& model, const corpus::Dataset& ds,
                                  const std::vector<int>& probes);

MetricsReport eval_identity_preservation(sequencer::LoadedModel& model, const corpus::Dataset& ds,
                                         const std::vector<int>& probes,
                                         backbones::IdentityNet<float>& idnet,
                                         const VerifierCalibration& cal);

/// Two equal-budget runs (pyramid vs one-pathway discriminator) followed by
/// aging-accuracy evaluation of both.
std::pair<MetricsReport, MetricsReport> eval_ablation_one_pathway(const corpus::Dataset& ds,
                                                                  trainer::TrainConfig cfg);

/// Equal-budget runs for the acgan / k_logit / k_discriminators schemes.
std::vector<MetricsReport> eval_scheme_comparison(const corpus::Dataset& ds,
                                                  trainer::TrainConfig cfg);

/// CSV serializations (schemas documented in the repo README).
std::string aging_accuracy_csv(const MetricsReport& r);
std::string identity_preservation_csv(const MetricsReport& r);

/// PNG figure: one row per probe, columns [input, aged 1..k].
void write_grid_figure(sequencer::LoadedModel& model, const corpus::Dataset& ds,
                       const std::vector<int>& probes, const std::string& path);

/// PNG strip of an n-frame aging sequence for one probe.
void write_sequence_strip(sequencer::LoadedModel& model, const corpus::Dataset& ds, int probe,
                          int n, const std::string& path);

}  // namespace pyrage::evalsuite
