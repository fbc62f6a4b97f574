#ifndef APSK_ANALYTIC_HPP
#define APSK_ANALYTIC_HPP

#include <vector>

#include "apsk/channel.hpp"
#include "apsk/constellation.hpp"
#include "apsk/quadrature.hpp"

namespace apsk {

// Gaussian tail probability P(Z > x).
double q_function(double x);

// E[Q(kappa |h|)] with |h|^2 ~ Exp(1): closed form (1 - kappa/sqrt(kappa^2+2))/2.
double rayleigh_avg_q(double kappa);

// Same expectation by truncated Gauss-Legendre quadrature of
// Q(kappa r) 2r e^{-r^2}; kept as an independent route for cross-checks.
double rayleigh_avg_q_quadrature(double kappa, const QuadratureSpec& spec);

// Amplitude factor inside the subset pairwise Q argument
//   Q( sqrt(2) |h| * gain * sqrt(P) * sin(phi + delta/2) ).
//
// kRingRadius is the exact pairwise probability for the angle-metric
// comparison (gain = i*R, the transmitted ring radius; the reference
// radius cancels against the noise projection). kRingRadiusSquared keeps
// an extra R factor (gain = i*R^2) and kUnitGain drops the amplitude
// altogether (gain = 1); both are retained because the min-max design
// tables and the simplified nearest-neighbor term are defined against
// those variants.
enum class SubsetGainModel { kRingRadius, kRingRadiusSquared, kUnitGain };

const char* subset_gain_model_name(SubsetGainModel model);

// Pairwise amplitude (PAM) error term, fading-averaged:
// rayleigh_avg_q(sqrt(P) |i-j| R / sqrt(2)). Throws kSameIndex if i == j.
double p_pam_pair(int i, int j, const Constellation& c, const ChannelParams& params);

// Pairwise subset error term for transmitted ring i against a subset
// delta_angle away (delta_angle in (0, 2pi)), averaged over |h| and
// phi ~ U[-a, a] by nested quadrature.
double p_subset_pair(int i, double delta_angle, const Constellation& c,
                     const ChannelParams& params, const QuadratureSpec& quad,
                     SubsetGainModel model = SubsetGainModel::kRingRadius);

// All pairwise terms and their union-bound total for a transmitted
// point (i, k). Matrices are row-major, 1-based semantics via at().
struct ErrorBreakdown {
    int k_subsets = 0;
    int n_per_subset = 0;
    std::vector<double> subset_pairs; // K x K, [k][u] = P_Subset k->u at ring i; diag 0
    std::vector<double> pam_pairs;    // N x N, [i][j] = P_PAM i->j; diag 0
    double p_total = 0.0;             // clamped union bound for the given (i, k)
    double p_subset_dominant = 0.0;   // k -> k+1 term (0 when K = 1)
    double p_pam_dominant = 0.0;      // i -> adjacent term (0 when N = 1)
    bool subset_dominant_defined = false;
    bool pam_dominant_defined = false;
    bool clamped = false;             // raw union sum exceeded 1

    double subset_at(int k, int u) const { return subset_pairs[(k - 1) * k_subsets + (u - 1)]; }
    double pam_at(int i, int j) const { return pam_pairs[(i - 1) * n_per_subset + (j - 1)]; }
};

ErrorBreakdown p_total_union(int i, int k, const Constellation& c, const ChannelParams& params,
                             const QuadratureSpec& quad,
                             SubsetGainModel model = SubsetGainModel::kRingRadius);

// Union bound on the uniform-symbol error rate: per-ring union bounds
// (each clamped to 1) averaged over the transmitted ring; the subset
// index is immaterial by symmetry.
double union_bound_average(const Constellation& c, const ChannelParams& params,
                           const QuadratureSpec& quad,
                           SubsetGainModel model = SubsetGainModel::kRingRadius);

// Design-table objective: the default keeps the ring-radius-squared gain
// at i = 1 (worst ring); kPaperExactEq25 switches the subset term to the
// unit-gain nearest-neighbor form.
enum class ObjectiveMode { kDefault, kPaperExactEq25 };

const char* objective_mode_name(ObjectiveMode mode);

struct DominantTerms {
    double p_subset = 0.0;
    double p_pam = 0.0;
    bool subset_defined = false; // false when K = 1 (no angular neighbors)
    bool pam_defined = false;    // false when N = 1 (no amplitude neighbors)

    double objective() const { return p_subset > p_pam ? p_subset : p_pam; }
};

DominantTerms dominant_objective(const Constellation& c, const ChannelParams& params,
                                 const QuadratureSpec& quad,
                                 ObjectiveMode mode = ObjectiveMode::kDefault);

} // namespace apsk

#endif
