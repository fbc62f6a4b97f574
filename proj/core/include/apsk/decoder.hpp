#ifndef APSK_DECODER_HPP
#define APSK_DECODER_HPP

#include "apsk/channel.hpp"
#include "apsk/constellation.hpp"

namespace apsk {

struct DecodeOutcome {
    int subset_index = 0;    // d in [1..K]
    int amplitude_index = 0; // n in [1..N]
    int point_index = 0;     // 0-based position in Constellation::points
    bool reestimated = false;
};

// Real inner product of y and h_hat*x viewed as 2-vectors:
// Re(y * conj(h_hat * x)). Positively homogeneous in both arguments.
inline double angle_metric(Complex y, Complex h_hat, Complex x) {
    return std::real(y * std::conj(h_hat * x));
}

// Step 1: argmax over k of angle_metric(y, h_hat, x_{1k}); ties (including
// y == 0) break toward the smallest k. Requires a PSK-PAM or PSK family.
int decode_subset(Complex y, Complex h_hat, const Constellation& c);

// Step 2: argmin over i of |y - sqrt(P) h_hat x_{id}|; ties break toward
// the smallest i. The sqrt(P) factor is applied because the channel
// scales the signal by it; omitting it biases decoding whenever P != 1.
int decode_point(Complex y, Complex h_hat, const Constellation& c, int subset_d,
                 const ChannelParams& params);

// True when cos(a) < (2N-1)/(2N), i.e. the phase bound is too large for
// amplitude decoding to be trusted without re-estimating the channel.
bool reestimation_required(int n_per_subset, double phase_bound_a);

// Two-step decode: Step 1, then (optionally) channel re-estimation from
// the Step-1 decision, then Step 2. The re-estimated quantity y / x_{1d}
// approximates sqrt(P) h, so it replaces the whole Step-2 gain rather
// than h_hat alone.
DecodeOutcome two_step_decode(Complex y, Complex h_hat, const Constellation& c,
                              const ChannelParams& params, bool allow_reestimate = true);

// Baseline receiver: argmin over all M points of |y - sqrt(P) h_hat x|;
// ties break toward the lowest point index. Works for any family.
int coherent_min_distance_decode(Complex y, Complex h_hat, const Constellation& c,
                                 const ChannelParams& params);

} // namespace apsk

#endif
