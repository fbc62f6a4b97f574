#ifndef APSK_EXPERIMENT_HPP
#define APSK_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apsk/analytic.hpp"
#include "apsk/config.hpp"
#include "apsk/design.hpp"

namespace apsk {

struct SerEstimate {
    double snr_db = 0.0;
    std::int64_t trials = 0;
    std::int64_t errors = 0;
    double ser = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
};

// Wilson score interval at 95%; always brackets errors/trials.
SerEstimate wilson_estimate(double snr_db, std::int64_t errors, std::int64_t trials);

// Monte Carlo SER at one SNR point. Trial t consumes the counter-derived
// stream (master_seed, trial_base + t) in the order: symbol index, then
// the channel draw. The result is an exact function of (config bytes,
// seed), independent of n_threads and of how trials are partitioned.
//
// trial_base defaults to (position of snr_db in the config grid) *
// trials_per_point, giving sweep points disjoint stream ranges; an SNR
// not on the grid uses base 0.
SerEstimate run_ser_point(const ExperimentConfig& config, double snr_db, int n_threads = 0,
                          std::int64_t trial_base = -1);

// run_ser_point over the whole grid; writes CSV when config.out is set.
std::vector<SerEstimate> run_sweep(const ExperimentConfig& config, int n_threads = 0);

enum class AnalyticMode { kUnion, kDominant };

struct AnalyticPoint {
    double snr_db = 0.0;
    double p_subset_dom = 0.0;
    double p_pam_dom = 0.0;
    double p_total = 0.0; // union average (kUnion) or max of dominants (kDominant)
};

// Analytic error curve over the config grid. Dominant columns follow the
// design objective (mode selects the eq-25 variant); p_total in kUnion
// mode is the ring-averaged union bound with the exact ring-radius gain.
std::vector<AnalyticPoint> run_analytic_curve(const ExperimentConfig& config,
                                              const QuadratureSpec& quad, AnalyticMode mode,
                                              ObjectiveMode objective_mode = ObjectiveMode::kDefault);

// CSV writers. Every file starts with '#' comment rows recording the
// config hash, seed, normalization, SNR convention, generator id, the
// sqrt(P) scaling flag and (where relevant) the objective/gain models.
void write_ser_csv(const std::string& path, const ExperimentConfig& config,
                   const std::vector<SerEstimate>& points);
void write_analytic_csv(const std::string& path, const ExperimentConfig& config,
                        const QuadratureSpec& quad, AnalyticMode mode,
                        ObjectiveMode objective_mode, const std::vector<AnalyticPoint>& points);
void write_design_csv(const std::string& path, const DesignReport& report);
void write_constellation_csv(const std::string& path, const Constellation& c);

std::string ser_csv_text(const ExperimentConfig& config, const std::vector<SerEstimate>& points);
std::string analytic_csv_text(const ExperimentConfig& config, const QuadratureSpec& quad,
                              AnalyticMode mode, ObjectiveMode objective_mode,
                              const std::vector<AnalyticPoint>& points);
std::string design_csv_text(const DesignReport& report);
std::string constellation_csv_text(const Constellation& c);

// Fixed-format float for CSV cells ("%.10g"): deterministic bytes.
std::string format_double(double v);

} // namespace apsk

#endif
