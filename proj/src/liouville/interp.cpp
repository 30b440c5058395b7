#include "wiglab/liouville/interp.hpp"

#include <cmath>

namespace wiglab {

double periodic_wrap(double value, double lo, double period) {
    double t = std::fmod(value - lo, period);
    if (t < 0.0) t += period;
    return lo + t;
}

namespace {

inline double cubic_kernel(double pm1, double p0, double p1, double p2, double t) {
    // Catmull-Rom weights; exact for cubics on uniform nodes.
    return p0 + 0.5 * t * (p1 - pm1 +
                           t * (2.0 * pm1 - 5.0 * p0 + 4.0 * p1 - p2 +
                                t * (3.0 * (p0 - p1) + p2 - pm1)));
}

} // namespace

double bicubic_eval(const PhaseField& f, double x, double k) {
    const PhaseGrid& g = f.grid;
    const double fx = (periodic_wrap(x, g.x_min, g.x_length()) - g.x_min) / g.dx;
    const double fk = (periodic_wrap(k, g.k_min, g.k_length()) - g.k_min) / g.dk;
    const int i0 = static_cast<int>(std::floor(fx));
    const int j0 = static_cast<int>(std::floor(fk));
    const double tx = fx - i0;
    const double tk = fk - j0;

    auto sample = [&](int di, int dj) {
        const int i = ((i0 + di) % g.n_x + g.n_x) % g.n_x;
        const int j = ((j0 + dj) % g.n_k + g.n_k) % g.n_k;
        return f.at(i, j).real();
    };

    double col[4];
    for (int di = -1; di <= 2; ++di) {
        col[di + 1] = cubic_kernel(sample(di, -1), sample(di, 0), sample(di, 1),
                                   sample(di, 2), tk);
    }
    return cubic_kernel(col[0], col[1], col[2], col[3], tx);
}

} // namespace wiglab
