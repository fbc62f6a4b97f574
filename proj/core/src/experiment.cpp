#include "apsk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <thread>

#include "apsk/decoder.hpp"
#include "apsk/error.hpp"
#include "apsk/sha1.hpp"

namespace apsk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

SerEstimate wilson_estimate(double snr_db, std::int64_t errors, std::int64_t trials) {
    if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
    constexpr double z = 1.959963984540054; // 97.5% normal quantile
    double n = static_cast<double>(trials);
    double p = static_cast<double>(errors) / n;
    double z2n = z * z / n;
    double denom = 1.0 + z2n;
    double center = (p + 0.5 * z2n) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
    SerEstimate est;
    est.snr_db = snr_db;
    est.trials = trials;
    est.errors = errors;
    est.ser = p;
    est.ci95_low = std::max(0.0, center - half);
    est.ci95_high = std::min(1.0, center + half);
    return est;
}

namespace {

std::int64_t count_errors_range(const Constellation& c, const ChannelParams& params,
                                DecoderAlgo algo, bool allow_reestimate, std::uint64_t seed,
                                std::int64_t lo, std::int64_t hi) {
    std::int64_t errors = 0;
    const std::uint64_t m = static_cast<std::uint64_t>(c.m);
    for (std::int64_t t = lo; t < hi; ++t) {
        RandomStream stream(seed, static_cast<std::uint64_t>(t));
        int sym = static_cast<int>(stream.next_below(m));
        ChannelDraw draw = draw_channel(params, stream);
        Complex y = apply_channel(c.points[sym].value, draw, params);
        int decoded;
        if (algo == DecoderAlgo::kCoherent) {
            decoded = coherent_min_distance_decode(y, draw.h_hat, c, params);
        } else {
            decoded = two_step_decode(y, draw.h_hat, c, params, allow_reestimate).point_index;
        }
        if (decoded != sym) ++errors;
    }
    return errors;
}

int effective_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

SerEstimate run_ser_point(const ExperimentConfig& config, double snr_db, int n_threads,
                          std::int64_t trial_base) {
    Constellation c = make_constellation(config.constellation);
    ChannelParams params{std::pow(10.0, snr_db / 10.0), config.phase_bound_a};
    DecoderAlgo algo = config.resolved_algorithm();

    if (trial_base < 0) {
        trial_base = 0;
        for (size_t p = 0; p < config.snr_grid_db.size(); ++p) {
            if (config.snr_grid_db[p] == snr_db) {
                trial_base = static_cast<std::int64_t>(p) * config.trials_per_point;
                break;
            }
        }
    }

    const std::int64_t trials = config.trials_per_point;
    const int workers =
        static_cast<int>(std::min<std::int64_t>(effective_threads(n_threads), trials));
    std::vector<std::future<std::int64_t>> parts;
    parts.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::int64_t lo = trial_base + trials * w / workers;
        std::int64_t hi = trial_base + trials * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, count_errors_range, std::cref(c),
                                   std::cref(params), algo, config.allow_reestimate,
                                   config.master_seed, lo, hi));
    }
    std::int64_t errors = 0;
    for (auto& part : parts) errors += part.get(); // associative integer merge
    return wilson_estimate(snr_db, errors, trials);
}

std::vector<SerEstimate> run_sweep(const ExperimentConfig& config, int n_threads) {
    std::vector<SerEstimate> points;
    points.reserve(config.snr_grid_db.size());
    for (size_t p = 0; p < config.snr_grid_db.size(); ++p) {
        points.push_back(run_ser_point(config, config.snr_grid_db[p], n_threads,
                                       static_cast<std::int64_t>(p) * config.trials_per_point));
    }
    if (!config.out_path.empty()) write_ser_csv(config.out_path, config, points);
    return points;
}

std::vector<AnalyticPoint> run_analytic_curve(const ExperimentConfig& config,
                                              const QuadratureSpec& quad, AnalyticMode mode,
                                              ObjectiveMode objective_mode) {
    Constellation c = make_constellation(config.constellation);
    if (c.family == Family::kQam)
        throw Error(ErrorCode::kInvalidArgument, "analytic curves need a PSK-PAM or PSK constellation");

    // Dominant columns are ring-averaged so that the union column (also a
    // ring average) dominates them at every grid point. The eq-25 variant
    // swaps in the unit-gain subset term.
    SubsetGainModel dom_model = objective_mode == ObjectiveMode::kPaperExactEq25
                                    ? SubsetGainModel::kUnitGain
                                    : SubsetGainModel::kRingRadius;

    std::vector<AnalyticPoint> out;
    out.reserve(config.snr_grid_db.size());
    for (double snr_db : config.snr_grid_db) {
        ChannelParams params{std::pow(10.0, snr_db / 10.0), config.phase_bound_a};
        AnalyticPoint pt;
        pt.snr_db = snr_db;
        if (c.n_per_subset >= 2) pt.p_pam_dom = p_pam_pair(1, 2, c, params);
        if (c.k_subsets >= 2) {
            if (dom_model == SubsetGainModel::kUnitGain) {
                pt.p_subset_dom = p_subset_pair(1, c.subset_spacing(), c, params, quad, dom_model);
            } else {
                double acc = 0.0;
                for (int i = 1; i <= c.n_per_subset; ++i)
                    acc += p_subset_pair(i, c.subset_spacing(), c, params, quad, dom_model);
                pt.p_subset_dom = acc / c.n_per_subset;
            }
        }
        pt.p_total = mode == AnalyticMode::kUnion
                         ? union_bound_average(c, params, quad)
                         : std::max(pt.p_subset_dom, pt.p_pam_dom);
        out.push_back(pt);
    }
    return out;
}

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::string common_metadata(const ExperimentConfig& config) {
    const ConstellationSpec& s = config.constellation;
    std::string meta;
    meta += "# config_sha1=" + config_hash(config) + "\n";
    meta += "# seed=" + std::to_string(config.master_seed) + "\n";
    meta += "# family=" + std::string(family_name(s.family)) + " m=" + std::to_string(s.m);
    if (s.family == Family::kPskPam) meta += " k=" + std::to_string(s.k);
    meta += " norm=" + std::string(norm_mode_name(s.norm)) + "\n";
    meta += "# phase_bound=" + format_double(config.phase_bound_a) + "\n";
    meta += "# snr_convention=snr_db=10*log10(P), noise CN(0,1)\n";
    meta += "# generator=" + std::string(generator_id()) + "\n";
    meta += "# sqrt_p_in_distance=true\n";
    return meta;
}

} // namespace

std::string ser_csv_text(const ExperimentConfig& config, const std::vector<SerEstimate>& points) {
    std::string text = "# apsk-ser-v1\n";
    text += common_metadata(config);
    text += "# decoder=" + std::string(decoder_algo_name(config.resolved_algorithm())) +
            " reestimate=" + (config.allow_reestimate ? "on" : "off") + "\n";
    text += "snr_db,trials,errors,ser,ci95_low,ci95_high\n";
    for (const auto& p : points) {
        text += format_double(p.snr_db) + "," + std::to_string(p.trials) + "," +
                std::to_string(p.errors) + "," + format_double(p.ser) + "," +
                format_double(p.ci95_low) + "," + format_double(p.ci95_high) + "\n";
    }
    return text;
}

std::string analytic_csv_text(const ExperimentConfig& config, const QuadratureSpec& quad,
                              AnalyticMode mode, ObjectiveMode objective_mode,
                              const std::vector<AnalyticPoint>& points) {
    std::string text = "# apsk-analytic-v1\n";
    text += common_metadata(config);
    text += "# objective_mode=" + std::string(objective_mode_name(objective_mode)) + "\n";
    text += "# p_total_mode=" + std::string(mode == AnalyticMode::kUnion ? "union-avg" : "dominant-max") +
            " union_gain_model=" + subset_gain_model_name(SubsetGainModel::kRingRadius) + "\n";
    text += "# quadrature=gauss-legendre rmax=" + format_double(quad.h_truncation) +
            " h_nodes=" + std::to_string(quad.h_nodes) +
            " phi_nodes=" + std::to_string(quad.phi_nodes) +
            " rel_tol=" + format_double(quad.rel_tol) + "\n";
    text += "snr_db,p_subset_dom,p_pam_dom,p_total\n";
    for (const auto& p : points) {
        text += format_double(p.snr_db) + "," + format_double(p.p_subset_dom) + "," +
                format_double(p.p_pam_dom) + "," + format_double(p.p_total) + "\n";
    }
    return text;
}

std::string design_csv_text(const DesignReport& report) {
    std::string text = "# apsk-design-v1\n";
    text += "# m=" + std::to_string(report.m) +
            " phase_bound=" + format_double(report.phase_bound_a) +
            " power_p=" + format_double(report.power_p) +
            " norm=" + norm_mode_name(report.norm_mode) +
            " objective_mode=" + objective_mode_name(report.objective_mode) + "\n";
    text += "# snr_convention=snr_db=10*log10(P), noise CN(0,1)\n";
    text += "# sqrt_p_in_distance=true\n";
    text += "k,n,p_subset_dom,p_pam_dom,objective,is_best\n";
    for (const auto& cand : report.candidates) {
        if (cand.quad_failed) text += "# excluded (quadrature failed): k=" + std::to_string(cand.k) + "\n";
        text += std::to_string(cand.k) + "," + std::to_string(cand.n) + "," +
                format_double(cand.p_subset_dominant) + "," + format_double(cand.p_pam_dominant) +
                "," + (cand.quad_failed ? "nan" : format_double(cand.objective)) + "," +
                (cand.k == report.best_k ? "1" : "0") + "\n";
    }
    return text;
}

std::string constellation_csv_text(const Constellation& c) {
    std::string text = "# apsk-constellation-v1\n";
    text += "# family=" + std::string(family_name(c.family)) + " m=" + std::to_string(c.m) +
            " k=" + std::to_string(c.k_subsets) + " n=" + std::to_string(c.n_per_subset) +
            " r=" + format_double(c.radius_r) + " norm=" + norm_mode_name(c.norm_mode) + "\n";
    if (c.family == Family::kQam)
        text += "# qam layout: odd-integer grid, lexicographic (re, im); singleton subsets\n";
    text += "index,subset_k,amplitude_i,re,im\n";
    for (size_t idx = 0; idx < c.points.size(); ++idx) {
        const auto& p = c.points[idx];
        text += std::to_string(idx) + "," + std::to_string(p.subset_index) + "," +
                std::to_string(p.amplitude_index) + "," + format_double(p.value.real()) + "," +
                format_double(p.value.imag()) + "\n";
    }
    return text;
}

void write_ser_csv(const std::string& path, const ExperimentConfig& config,
                   const std::vector<SerEstimate>& points) {
    write_text_file(path, ser_csv_text(config, points));
}

void write_analytic_csv(const std::string& path, const ExperimentConfig& config,
                        const QuadratureSpec& quad, AnalyticMode mode,
                        ObjectiveMode objective_mode, const std::vector<AnalyticPoint>& points) {
    write_text_file(path, analytic_csv_text(config, quad, mode, objective_mode, points));
}

void write_design_csv(const std::string& path, const DesignReport& report) {
    write_text_file(path, design_csv_text(report));
}

void write_constellation_csv(const std::string& path, const Constellation& c) {
    write_text_file(path, constellation_csv_text(c));
}

} // namespace apsk
