#ifndef APSK_QUADRATURE_HPP
#define APSK_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace apsk {

// Controls the nested fading/phase averages. The |h| integral runs over
// [0, h_truncation] against the Rayleigh density 2r e^{-r^2}; the default
// truncation sqrt(-ln 1e-14) leaves tail mass 1e-14. Convergence is
// declared when doubling every node count moves the result by no more
// than rel_tol (relative).
struct QuadratureSpec {
    double h_truncation = 5.677711699657161; // sqrt(-ln 1e-14)
    int h_nodes = 64;
    int phi_nodes = 64;
    double rel_tol = 1e-9;
};

// Validates h_truncation >= 5, node counts >= 16, rel_tol in (0, 1e-6].
void validate(const QuadratureSpec& spec);

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Nodes/weights via Newton iteration on the Legendre recurrence; results
// are cached per order (thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

// E over |h| (Rayleigh, E|h|^2 = 1) and phi ~ U[-a, a] of f(r, phi),
// with node-doubling refinement. When a == 0 the phi average degenerates
// to the single point phi = 0 (the 1/(2a) prefactor never appears).
// Throws kQuadNonconverged if doubling runs out of headroom.
double fading_phase_average(const std::function<double(double, double)>& f, double a,
                            const QuadratureSpec& spec);

} // namespace apsk

#endif
