#ifndef APSK_CONSTELLATION_HPP
#define APSK_CONSTELLATION_HPP

#include <vector>

#include "apsk/math.hpp"

namespace apsk {

enum class Family { kPskPam, kQam, kPsk };

// kMeanPower: (1/M) sum |x|^2 = 1. Default; makes SNR comparisons across
//             families fair.
// kPaperSum:  sum |x|^2 = 1, i.e. R = sqrt(6 / (M (N+1)(2N+1))) verbatim.
enum class NormMode { kMeanPower, kPaperSum };

const char* family_name(Family f);
const char* norm_mode_name(NormMode m);

struct ConstellationPoint {
    Complex value;
    int subset_index;    // k in [1..K]
    int amplitude_index; // i in [1..N]
};

// Immutable after construction; safe to share across threads.
//
// PSK-PAM layout: K rays at angles alpha_k = 2*pi*(k-1)/K (alpha_1 = 0),
// N collinear points per ray at radii i*R, ordered lexicographically by
// (k, i). PSK is the N = 1 special case.
//
// QAM layout: odd-integer grid scaled to the requested normalization,
// points ordered lexicographically by (re, im); each point forms its own
// singleton subset (subset_index = position, amplitude_index = 1) so the
// index fields stay meaningful for serialization.
struct Constellation {
    Family family = Family::kPskPam;
    int m = 0;            // total points M
    int k_subsets = 0;    // K
    int n_per_subset = 0; // N, with K*N = M
    double radius_r = 0.0;
    NormMode norm_mode = NormMode::kMeanPower;
    std::vector<ConstellationPoint> points;

    // 1-based (k, i) to flat 0-based position.
    int point_index(int k, int i) const { return (k - 1) * n_per_subset + (i - 1); }
    const ConstellationPoint& at(int k, int i) const { return points[point_index(k, i)]; }

    double subset_angle(int k) const { return kTwoPi * (k - 1) / k_subsets; }
    double subset_spacing() const { return kTwoPi / k_subsets; } // delta
};

// K rays with M/K points per ray. Throws kZero if m == 0, kNonDivisor if
// k_subsets does not divide m.
Constellation build_psk_pam(int m, int k_subsets, NormMode norm_mode);

// Rectangular grid baseline; m in {4, 8, 16, 64} (8 is the 4x2 grid).
// Throws kUnsupportedM otherwise.
Constellation build_qam(int m, NormMode norm_mode);

// Equivalent to build_psk_pam(m, m, norm_mode); throws kZero if m < 2.
Constellation build_psk(int m, NormMode norm_mode);

// (1/M) sum |x|^2.
double mean_power(const Constellation& c);

} // namespace apsk

#endif
