#ifndef APSK_CONFIG_HPP
#define APSK_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apsk/constellation.hpp"

namespace apsk {

enum class DecoderAlgo {
    kAuto,    // two-step for psk-pam/psk, coherent for qam
    kTwoStep,
    kCoherent,
};

const char* decoder_algo_name(DecoderAlgo a);

struct ConstellationSpec {
    Family family = Family::kPskPam;
    int m = 0;
    int k = 0; // meaningful for psk-pam only
    NormMode norm = NormMode::kMeanPower;
};

Constellation make_constellation(const ConstellationSpec& spec);

// One Monte Carlo sweep: a constellation, a phase bound, an SNR grid, a
// trial budget per grid point, and a master seed. Parsed from JSON with
// a closed schema: unknown keys are rejected, not ignored.
struct ExperimentConfig {
    ConstellationSpec constellation;
    double phase_bound_a = 0.0;
    std::vector<double> snr_grid_db; // strictly increasing
    std::int64_t trials_per_point = 0;
    std::uint64_t master_seed = 0;
    DecoderAlgo algorithm = DecoderAlgo::kAuto;
    bool allow_reestimate = true;
    std::string out_path; // optional CSV destination

    // Decoder actually used once the family is known.
    DecoderAlgo resolved_algorithm() const;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

// Canonical serialization (sorted keys, fixed layout); the git-blob SHA-1
// of this string is the config hash stamped into output metadata.
std::string canonical_json(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);

// Figure manifest: several simulated series (and optionally analytic
// curves) sharing one phase bound, grid, trial budget and seed.
struct FigureSeries {
    std::string label;
    ConstellationSpec constellation;
    bool allow_reestimate = true;
};

struct FigureAnalyticSeries {
    std::string label;
    ConstellationSpec constellation; // psk-pam/psk only
    bool union_bound = true;         // false -> dominant terms
};

struct FigureConfig {
    std::string name;
    std::string title;
    double phase_bound_a = 0.0;
    std::vector<double> snr_grid_db;
    std::int64_t trials_per_point = 0;
    std::uint64_t master_seed = 0;
    std::vector<FigureSeries> series;
    std::vector<FigureAnalyticSeries> analytic;
};

FigureConfig parse_figure_config(const std::string& json_text);
std::string canonical_json(const FigureConfig& config);

// Per-series experiment config (shared seed so series are paired on the
// same channel realizations).
ExperimentConfig experiment_for_series(const FigureConfig& fig, const FigureSeries& series);

} // namespace apsk

#endif
