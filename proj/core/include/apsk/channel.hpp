#ifndef APSK_CHANNEL_HPP
#define APSK_CHANNEL_HPP

#include "apsk/math.hpp"
#include "apsk/rng.hpp"

namespace apsk {

struct ChannelParams {
    double power_p = 1.0;      // linear transmit power, noise-normalized
    double phase_bound_a = 0.0; // phase-estimate error bound, radians, in [0, pi]
};

// One realization of the fading / estimation model:
//   y = sqrt(P) h x + w,  h ~ CN(0,1),  w ~ CN(0,1),
//   h_hat = |h| e^{j(theta + phi)},  phi ~ U[-a, a].
struct ChannelDraw {
    Complex h;
    double theta = 0.0; // angle(h)
    double phi = 0.0;   // phase-estimate error
    Complex w;
    Complex h_hat;
};

// Consumes the stream in the fixed order (h.re, h.im, w.re, w.im, phi);
// a run is reproducible from (master_seed, trial_index) alone. h_hat is
// formed as h * e^{j phi}, so phi == 0 gives h_hat bit-identical to h.
ChannelDraw draw_channel(const ChannelParams& params, RandomStream& stream);

// sqrt(P) * h * x + w.
Complex apply_channel(Complex x, const ChannelDraw& draw, const ChannelParams& params);

} // namespace apsk

#endif
