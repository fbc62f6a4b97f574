#ifndef APSK_MATH_HPP
#define APSK_MATH_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace apsk {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps an angle into (-pi, pi]. std::remainder lands in [-pi, pi]; the
// single boundary case -pi is folded to +pi so that the convention is
// half-open on the left everywhere (decoding at boundary angles depends
// on this being fixed).
inline double wrap_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

// Angle of a complex value in (-pi, pi]. std::arg can return exactly -pi
// for arguments with a negative-zero imaginary part; fold that to +pi.
inline double angle_of(Complex z) {
    double a = std::arg(z);
    if (a <= -kPi) a += kTwoPi;
    return a;
}

} // namespace apsk

#endif
