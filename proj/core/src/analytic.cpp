#include "apsk/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apsk/error.hpp"

namespace apsk {

double q_function(double x) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return 0.5 * std::erfc(x * inv_sqrt2);
}

double rayleigh_avg_q(double kappa) {
    if (!(kappa >= 0.0))
        throw Error(ErrorCode::kInvalidArgument, "kappa must be nonnegative");
    return 0.5 * (1.0 - kappa / std::sqrt(kappa * kappa + 2.0));
}

double rayleigh_avg_q_quadrature(double kappa, const QuadratureSpec& spec) {
    return fading_phase_average(
        [kappa](double r, double) { return q_function(kappa * r); }, 0.0, spec);
}

const char* subset_gain_model_name(SubsetGainModel model) {
    switch (model) {
        case SubsetGainModel::kRingRadius: return "ring-radius";
        case SubsetGainModel::kRingRadiusSquared: return "ring-radius-squared";
        case SubsetGainModel::kUnitGain: return "unit-gain";
    }
    return "?";
}

const char* objective_mode_name(ObjectiveMode mode) {
    return mode == ObjectiveMode::kDefault ? "default" : "paper-exact-eq25";
}

namespace {

void require_ray_family(const Constellation& c, const char* what) {
    if (c.family == Family::kQam)
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(what) + " is defined for PSK-PAM/PSK constellations only");
}

double subset_gain(SubsetGainModel model, int ring_i, double radius_r) {
    switch (model) {
        case SubsetGainModel::kRingRadius: return ring_i * radius_r;
        case SubsetGainModel::kRingRadiusSquared: return ring_i * radius_r * radius_r;
        case SubsetGainModel::kUnitGain: return 1.0;
    }
    return 1.0;
}

} // namespace

double p_pam_pair(int i, int j, const Constellation& c, const ChannelParams& params) {
    require_ray_family(c, "p_pam_pair");
    if (i == j) throw Error(ErrorCode::kSameIndex, "pairwise term needs distinct amplitude indices");
    if (i < 1 || i > c.n_per_subset || j < 1 || j > c.n_per_subset)
        throw Error(ErrorCode::kInvalidArgument, "amplitude index out of range");
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    double kappa = std::sqrt(params.power_p) * std::abs(i - j) * c.radius_r * inv_sqrt2;
    return rayleigh_avg_q(kappa);
}

double p_subset_pair(int i, double delta_angle, const Constellation& c,
                     const ChannelParams& params, const QuadratureSpec& quad,
                     SubsetGainModel model) {
    require_ray_family(c, "p_subset_pair");
    if (!(delta_angle > 0.0 && delta_angle < kTwoPi))
        throw Error(ErrorCode::kInvalidArgument, "delta_angle must lie in (0, 2pi)");
    if (i < 1 || i > c.n_per_subset)
        throw Error(ErrorCode::kInvalidArgument, "ring index out of range");

    const double scale =
        std::numbers::sqrt2 * subset_gain(model, i, c.radius_r) * std::sqrt(params.power_p);
    const double half_delta = 0.5 * delta_angle;
    return fading_phase_average(
        [scale, half_delta](double r, double phi) {
            return q_function(scale * r * std::sin(phi + half_delta));
        },
        params.phase_bound_a, quad);
}

ErrorBreakdown p_total_union(int i, int k, const Constellation& c, const ChannelParams& params,
                             const QuadratureSpec& quad, SubsetGainModel model) {
    require_ray_family(c, "p_total_union");
    const int K = c.k_subsets;
    const int N = c.n_per_subset;
    if (i < 1 || i > N || k < 1 || k > K)
        throw Error(ErrorCode::kInvalidArgument, "point indices out of range");

    ErrorBreakdown out;
    out.k_subsets = K;
    out.n_per_subset = N;
    out.subset_pairs.assign(static_cast<size_t>(K) * K, 0.0);
    out.pam_pairs.assign(static_cast<size_t>(N) * N, 0.0);

    // Subset terms depend only on the wrapped angular offset, so compute
    // the K-1 distinct values once and fill the circulant matrix.
    std::vector<double> by_offset(K, 0.0);
    for (int off = 1; off < K; ++off) {
        by_offset[off] = p_subset_pair(i, c.subset_spacing() * off, c, params, quad, model);
    }
    for (int kk = 1; kk <= K; ++kk) {
        for (int u = 1; u <= K; ++u) {
            if (u == kk) continue;
            int off = ((u - kk) % K + K) % K;
            out.subset_pairs[(kk - 1) * K + (u - 1)] = by_offset[off];
        }
    }

    std::vector<double> pam_by_gap(N, 0.0);
    for (int gap = 1; gap < N; ++gap) {
        pam_by_gap[gap] = p_pam_pair(1, 1 + gap, c, params);
    }
    for (int ii = 1; ii <= N; ++ii) {
        for (int j = 1; j <= N; ++j) {
            if (j == ii) continue;
            out.pam_pairs[(ii - 1) * N + (j - 1)] = pam_by_gap[std::abs(ii - j)];
        }
    }

    double subset_sum = 0.0;
    for (int u = 1; u <= K; ++u)
        if (u != k) subset_sum += out.subset_at(k, u);
    double pam_sum = 0.0;
    for (int j = 1; j <= N; ++j)
        if (j != i) pam_sum += out.pam_at(i, j);

    double raw = subset_sum + pam_sum;
    out.clamped = raw > 1.0;
    out.p_total = std::min(raw, 1.0);

    if (K >= 2) {
        out.subset_dominant_defined = true;
        out.p_subset_dominant = by_offset[1]; // k -> k+1 (wraps)
    }
    if (N >= 2) {
        out.pam_dominant_defined = true;
        out.p_pam_dominant = pam_by_gap[1];
    }
    return out;
}

double union_bound_average(const Constellation& c, const ChannelParams& params,
                           const QuadratureSpec& quad, SubsetGainModel model) {
    require_ray_family(c, "union_bound_average");
    const int K = c.k_subsets;
    const int N = c.n_per_subset;

    // Precompute pairwise values once per distinct (ring, offset) / gap.
    std::vector<double> pam_by_gap(N, 0.0);
    for (int gap = 1; gap < N; ++gap) pam_by_gap[gap] = p_pam_pair(1, 1 + gap, c, params);

    double acc = 0.0;
    for (int i = 1; i <= N; ++i) {
        double subset_sum = 0.0;
        for (int off = 1; off < K; ++off)
            subset_sum += p_subset_pair(i, c.subset_spacing() * off, c, params, quad, model);
        double pam_sum = 0.0;
        for (int j = 1; j <= N; ++j)
            if (j != i) pam_sum += pam_by_gap[std::abs(i - j)];
        acc += std::min(subset_sum + pam_sum, 1.0);
    }
    return acc / N;
}

DominantTerms dominant_objective(const Constellation& c, const ChannelParams& params,
                                 const QuadratureSpec& quad, ObjectiveMode mode) {
    require_ray_family(c, "dominant_objective");
    DominantTerms t;
    if (c.n_per_subset >= 2) {
        t.pam_defined = true;
        t.p_pam = p_pam_pair(1, 2, c, params);
    }
    if (c.k_subsets >= 2) {
        t.subset_defined = true;
        SubsetGainModel model = mode == ObjectiveMode::kPaperExactEq25
                                    ? SubsetGainModel::kUnitGain
                                    : SubsetGainModel::kRingRadiusSquared;
        // Ring 1 is the worst case: the Q argument grows with i.
        t.p_subset = p_subset_pair(1, c.subset_spacing(), c, params, quad, model);
    }
    return t;
}

} // namespace apsk
