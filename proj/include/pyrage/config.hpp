#pragma once

#include <string>
#include <vector>

#include "pyrage/backbones.hpp"
#include "pyrage/trainer.hpp"

namespace pyrage::cli {

/// One config schema shared by all subcommands, organized per module.
struct AppConfig {
    struct Corpus {
        int n_identities = 200;
        int images_per_identity = 4;
        std::uint64_t seed = 7;
        std::string out_dir = "data/corpus";
        int image_size = 64;
    } corpus;

    struct Pretrain {
        backbones::PretrainConfig age;
        backbones::PretrainConfig id;
        std::string dataset = "data/corpus";
        std::string out_dir = "models";
    } pretrain;

    trainer::TrainConfig trainer;
    std::string trainer_dataset = "data/corpus";

    struct Sequence {
        std::string input;       // PNG path; empty = first young probe of the dataset
        std::string ckpt;
        std::string dataset = "data/corpus";
        int cluster = 3;
        int frames = 7;
        std::string out_dir = "out";
    } sequence;

    struct Evaluate {
        std::string ckpt;
        std::string dataset = "data/corpus";
        std::string id_backbone = "models/idnet";
        int probes = 100;
        int fold = 4;
        int grid_rows = 6;
        std::string out_dir = "eval";
    } evaluate;
};

/// Parses defaults + optional file + dotted overrides
/// (e.g. "trainer.scheme=k_logit"). Unknown keys are rejected at every
/// level. Empty config_path keeps the defaults.
AppConfig resolve_config(const std::string& config_path,
                         const std::vector<std::string>& overrides);

/// Full resolved schema as JSON; re-feeding it reproduces the run.
std::string resolved_json(const AppConfig& cfg);

/// Default run root override from the environment (PYRAGE_RUN_ROOT).
void apply_run_root_env(AppConfig& cfg);

}  // namespace pyrage::cli
