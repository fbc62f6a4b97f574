#include "apsk/channel.hpp"

#include "apsk/error.hpp"

namespace apsk {

ChannelDraw draw_channel(const ChannelParams& params, RandomStream& stream) {
    if (!(params.phase_bound_a >= 0.0 && params.phase_bound_a <= kPi))
        throw Error(ErrorCode::kInvalidArgument, "phase bound must lie in [0, pi]");
    if (!std::isfinite(params.power_p) || params.power_p < 0.0)
        throw Error(ErrorCode::kInvalidArgument, "power must be finite and nonnegative");

    ChannelDraw d;
    d.h = stream.next_cn01();
    d.w = stream.next_cn01();
    d.phi = stream.next_uniform(-params.phase_bound_a, params.phase_bound_a);
    d.theta = angle_of(d.h);
    d.h_hat = d.h * Complex(std::cos(d.phi), std::sin(d.phi));
    return d;
}

Complex apply_channel(Complex x, const ChannelDraw& draw, const ChannelParams& params) {
    return std::sqrt(params.power_p) * draw.h * x + draw.w;
}

} // namespace apsk
