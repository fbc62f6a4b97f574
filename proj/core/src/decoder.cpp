#include "apsk/decoder.hpp"

#include "apsk/error.hpp"

namespace apsk {

namespace {

void require_ray_family(const Constellation& c) {
    if (c.family == Family::kQam)
        throw Error(ErrorCode::kInvalidArgument, "two-step decoding needs a PSK-PAM or PSK constellation");
}

// argmin over i of |y - gain*x_{id}| for the ray d, with the effective
// gain already assembled by the caller.
int nearest_amplitude(Complex y, Complex gain, const Constellation& c, int subset_d) {
    int best_i = 1;
    double best_dist = std::norm(y - gain * c.at(subset_d, 1).value);
    for (int i = 2; i <= c.n_per_subset; ++i) {
        double dist = std::norm(y - gain * c.at(subset_d, i).value);
        if (dist < best_dist) {
            best_dist = dist;
            best_i = i;
        }
    }
    return best_i;
}

} // namespace

int decode_subset(Complex y, Complex h_hat, const Constellation& c) {
    require_ray_family(c);
    int best_k = 1;
    double best_metric = angle_metric(y, h_hat, c.at(1, 1).value);
    for (int k = 2; k <= c.k_subsets; ++k) {
        double metric = angle_metric(y, h_hat, c.at(k, 1).value);
        if (metric > best_metric) {
            best_metric = metric;
            best_k = k;
        }
    }
    return best_k;
}

int decode_point(Complex y, Complex h_hat, const Constellation& c, int subset_d,
                 const ChannelParams& params) {
    require_ray_family(c);
    if (subset_d < 1 || subset_d > c.k_subsets)
        throw Error(ErrorCode::kInvalidArgument, "subset index out of range");
    return nearest_amplitude(y, std::sqrt(params.power_p) * h_hat, c, subset_d);
}

bool reestimation_required(int n_per_subset, double phase_bound_a) {
    double n = static_cast<double>(n_per_subset);
    return std::cos(phase_bound_a) < (2.0 * n - 1.0) / (2.0 * n);
}

DecodeOutcome two_step_decode(Complex y, Complex h_hat, const Constellation& c,
                              const ChannelParams& params, bool allow_reestimate) {
    require_ray_family(c);
    DecodeOutcome out;
    out.subset_index = decode_subset(y, h_hat, c);

    Complex gain = std::sqrt(params.power_p) * h_hat;
    if (allow_reestimate && reestimation_required(c.n_per_subset, params.phase_bound_a)) {
        gain = y / c.at(out.subset_index, 1).value;
        out.reestimated = true;
    }
    out.amplitude_index = nearest_amplitude(y, gain, c, out.subset_index);
    out.point_index = c.point_index(out.subset_index, out.amplitude_index);
    return out;
}

int coherent_min_distance_decode(Complex y, Complex h_hat, const Constellation& c,
                                 const ChannelParams& params) {
    Complex gain = std::sqrt(params.power_p) * h_hat;
    int best = 0;
    double best_dist = std::norm(y - gain * c.points[0].value);
    for (int idx = 1; idx < c.m; ++idx) {
        double dist = std::norm(y - gain * c.points[idx].value);
        if (dist < best_dist) {
            best_dist = dist;
            best = idx;
        }
    }
    return best;
}

} // namespace apsk
