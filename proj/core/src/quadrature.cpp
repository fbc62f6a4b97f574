#include "apsk/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "apsk/error.hpp"
#include "apsk/math.hpp"

namespace apsk {

void validate(const QuadratureSpec& spec) {
    if (spec.h_truncation < 5.0)
        throw Error(ErrorCode::kInvalidArgument, "h_truncation must be >= 5");
    if (spec.h_nodes < 16 || spec.phi_nodes < 16)
        throw Error(ErrorCode::kInvalidArgument, "node counts must be >= 16");
    if (!(spec.rel_tol > 0.0) || spec.rel_tol > 1e-6)
        throw Error(ErrorCode::kInvalidArgument, "rel_tol must be in (0, 1e-6]");
}

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double eps = 1e-15;
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::fabs(z - z1) > eps);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<GaussLegendreRule>(compute_rule(n))).first;
    }
    return *it->second;
}

namespace {

// One evaluation at fixed node counts. Maps the r rule onto [0, rmax] and
// the phi rule onto [-a, a]; phi weights sum to 2a, so dividing by 2a
// turns the sum into the uniform average.
double evaluate(const std::function<double(double, double)>& f, double a,
                double rmax, int nr, int nphi) {
    const GaussLegendreRule& rr = gauss_legendre(nr);
    const double half_r = 0.5 * rmax;

    auto inner = [&](double phi) {
        double acc = 0.0;
        for (int i = 0; i < nr; ++i) {
            double r = half_r * (rr.nodes[i] + 1.0);
            acc += rr.weights[i] * f(r, phi) * 2.0 * r * std::exp(-r * r);
        }
        return acc * half_r;
    };

    if (a == 0.0) return inner(0.0);

    const GaussLegendreRule& rp = gauss_legendre(nphi);
    double acc = 0.0;
    for (int j = 0; j < nphi; ++j) {
        double phi = a * rp.nodes[j];
        acc += rp.weights[j] * inner(phi);
    }
    // weights sum to 2 on [-1,1]; the a factors cancel in the average
    return acc * 0.5;
}

} // namespace

double fading_phase_average(const std::function<double(double, double)>& f, double a,
                            const QuadratureSpec& spec) {
    validate(spec);
    constexpr int kMaxDoublings = 6;
    int nr = spec.h_nodes;
    int nphi = spec.phi_nodes;
    double prev = evaluate(f, a, spec.h_truncation, nr, nphi);
    for (int level = 0; level < kMaxDoublings; ++level) {
        nr *= 2;
        if (a != 0.0) nphi *= 2;
        double cur = evaluate(f, a, spec.h_truncation, nr, nphi);
        if (std::fabs(cur - prev) <= spec.rel_tol * std::max(std::fabs(cur), 1e-30)) {
            return cur;
        }
        prev = cur;
    }
    throw Error(ErrorCode::kQuadNonconverged,
                "node-doubling did not settle within rel_tol after " +
                    std::to_string(kMaxDoublings) + " refinements");
}

} // namespace apsk
