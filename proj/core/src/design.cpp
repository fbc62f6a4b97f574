#include "apsk/design.hpp"

#include <string>

#include "apsk/error.hpp"

namespace apsk {

std::vector<std::pair<int, int>> enumerate_factorizations(int m) {
    if (m < 1) throw Error(ErrorCode::kZero, "m must be positive");
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= m; ++k) {
        if (m % k == 0) out.emplace_back(k, m / k);
    }
    return out;
}

DesignReport optimize_kn(int m, const ChannelParams& params, const QuadratureSpec& quad,
                         NormMode norm_mode, ObjectiveMode objective_mode) {
    if (m < 2) throw Error(ErrorCode::kZero, "design search needs m >= 2");

    DesignReport report;
    report.m = m;
    report.phase_bound_a = params.phase_bound_a;
    report.power_p = params.power_p;
    report.norm_mode = norm_mode;
    report.objective_mode = objective_mode;

    double best_objective = 0.0;
    for (auto [k, n] : enumerate_factorizations(m)) {
        DesignCandidate cand;
        cand.k = k;
        cand.n = n;
        Constellation c = build_psk_pam(m, k, norm_mode);
        try {
            DominantTerms terms = dominant_objective(c, params, quad, objective_mode);
            cand.p_subset_dominant = terms.p_subset;
            cand.p_pam_dominant = terms.p_pam;
            cand.objective = terms.objective();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::kQuadNonconverged) throw;
            cand.quad_failed = true;
        }
        // <= so that equal objectives resolve to the larger k seen later.
        if (!cand.quad_failed && (report.best_k == 0 || cand.objective <= best_objective)) {
            best_objective = cand.objective;
            report.best_k = k;
            report.best_n = n;
        }
        report.candidates.push_back(cand);
    }
    if (report.best_k == 0)
        throw Error(ErrorCode::kQuadNonconverged,
                    "every candidate factorization of m=" + std::to_string(m) + " failed quadrature");
    return report;
}

} // namespace apsk
