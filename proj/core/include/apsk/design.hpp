#ifndef APSK_DESIGN_HPP
#define APSK_DESIGN_HPP

#include <utility>
#include <vector>

#include "apsk/analytic.hpp"

namespace apsk {

// All divisor pairs (k, m/k) of m in increasing k, including (1, m) and
// (m, 1).
std::vector<std::pair<int, int>> enumerate_factorizations(int m);

struct DesignCandidate {
    int k = 0;
    int n = 0;
    double p_subset_dominant = 0.0;
    double p_pam_dominant = 0.0;
    double objective = 0.0; // max of the two dominant terms
    bool quad_failed = false;
};

struct DesignReport {
    int m = 0;
    double phase_bound_a = 0.0;
    double power_p = 0.0;
    NormMode norm_mode = NormMode::kMeanPower;
    ObjectiveMode objective_mode = ObjectiveMode::kDefault;
    std::vector<DesignCandidate> candidates; // one per divisor, increasing k
    int best_k = 0;
    int best_n = 0;
};

// Brute-force min-max search over every (k, n) factorization of m; ties
// break toward larger k (more angular margin for equal objective).
// Candidates whose quadrature fails to converge are flagged and excluded
// from the argmin rather than aborting the whole report.
DesignReport optimize_kn(int m, const ChannelParams& params, const QuadratureSpec& quad,
                         NormMode norm_mode, ObjectiveMode objective_mode);

} // namespace apsk

#endif
