#include "apsk/constellation.hpp"

#include <algorithm>
#include <string>

#include "apsk/error.hpp"

namespace apsk {

const char* family_name(Family f) {
    switch (f) {
        case Family::kPskPam: return "psk-pam";
        case Family::kQam: return "qam";
        case Family::kPsk: return "psk";
    }
    return "?";
}

const char* norm_mode_name(NormMode m) {
    return m == NormMode::kMeanPower ? "mean-power" : "paper-sum";
}

namespace {

// Sum of squared ring radii over one subset is R^2 * N(N+1)(2N+1)/6, so
// the two normalizations differ only by the factor M under the root.
double ring_radius(int m, int n, NormMode mode) {
    double nn = static_cast<double>(n);
    double denom = (nn + 1.0) * (2.0 * nn + 1.0);
    if (mode == NormMode::kPaperSum) denom *= static_cast<double>(m);
    return std::sqrt(6.0 / denom);
}

} // namespace

Constellation build_psk_pam(int m, int k_subsets, NormMode norm_mode) {
    if (m <= 0) throw Error(ErrorCode::kZero, "constellation size must be positive, got m=" + std::to_string(m));
    if (k_subsets <= 0 || m % k_subsets != 0)
        throw Error(ErrorCode::kNonDivisor,
                    "k=" + std::to_string(k_subsets) + " does not divide m=" + std::to_string(m));

    Constellation c;
    c.family = Family::kPskPam;
    c.m = m;
    c.k_subsets = k_subsets;
    c.n_per_subset = m / k_subsets;
    c.norm_mode = norm_mode;
    c.radius_r = ring_radius(m, c.n_per_subset, norm_mode);
    c.points.reserve(m);
    for (int k = 1; k <= k_subsets; ++k) {
        double alpha = kTwoPi * (k - 1) / k_subsets;
        Complex dir(std::cos(alpha), std::sin(alpha));
        for (int i = 1; i <= c.n_per_subset; ++i) {
            c.points.push_back({static_cast<double>(i) * c.radius_r * dir, k, i});
        }
    }
    return c;
}

Constellation build_qam(int m, NormMode norm_mode) {
    int cols = 0;
    int rows = 0;
    switch (m) {
        case 4: cols = 2; rows = 2; break;
        case 8: cols = 4; rows = 2; break;
        case 16: cols = 4; rows = 4; break;
        case 64: cols = 8; rows = 8; break;
        default:
            throw Error(ErrorCode::kUnsupportedM,
                        "no QAM grid defined for m=" + std::to_string(m) + " (supported: 4, 8, 16, 64)");
    }

    // Odd-integer grid, lexicographic by (re, im).
    std::vector<Complex> raw;
    raw.reserve(m);
    for (int a = 0; a < cols; ++a) {
        for (int b = 0; b < rows; ++b) {
            raw.emplace_back(2 * a - cols + 1, 2 * b - rows + 1);
        }
    }
    double sum_sq = 0.0;
    for (Complex z : raw) sum_sq += std::norm(z);
    double target = norm_mode == NormMode::kMeanPower ? static_cast<double>(m) : 1.0;
    double scale = std::sqrt(target / sum_sq);

    Constellation c;
    c.family = Family::kQam;
    c.m = m;
    c.k_subsets = m;
    c.n_per_subset = 1;
    c.norm_mode = norm_mode;
    c.radius_r = scale;
    c.points.reserve(m);
    for (int idx = 0; idx < m; ++idx) {
        c.points.push_back({scale * raw[idx], idx + 1, 1});
    }
    return c;
}

Constellation build_psk(int m, NormMode norm_mode) {
    if (m < 2) throw Error(ErrorCode::kZero, "PSK needs at least 2 points, got m=" + std::to_string(m));
    Constellation c = build_psk_pam(m, m, norm_mode);
    c.family = Family::kPsk;
    return c;
}

double mean_power(const Constellation& c) {
    if (c.points.empty()) return 0.0;
    double s = 0.0;
    for (const auto& p : c.points) s += std::norm(p.value);
    return s / static_cast<double>(c.points.size());
}

} // namespace apsk
