#include "wiglab/liouville/flow.hpp"

#include <cmath>

#include "wiglab/core/errors.hpp"

namespace wiglab {

FlowState hamilton_flow(FlowState start, const Potential& potential, double t_span,
                        double dt) {
    if (!(dt > 0.0)) throw config_error("hamilton_flow: dt must be positive");
    if (t_span == 0.0) return start;

    const int n = static_cast<int>(std::ceil(std::abs(t_span) / dt - 1e-12));
    const double h = t_span / n;

    double x = start.x;
    double k = start.k;
    for (int s = 0; s < n; ++s) {
        const double k1x = k;
        const double k1k = -potential.grad(x);
        const double k2x = k + 0.5 * h * k1k;
        const double k2k = -potential.grad(x + 0.5 * h * k1x);
        const double k3x = k + 0.5 * h * k2k;
        const double k3k = -potential.grad(x + 0.5 * h * k2x);
        const double k4x = k + h * k3k;
        const double k4k = -potential.grad(x + h * k3x);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        k += h / 6.0 * (k1k + 2.0 * k2k + 2.0 * k3k + k4k);
    }
    return FlowState{x, k};
}

} // namespace wiglab
