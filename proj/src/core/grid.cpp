#include "wiglab/core/grid.hpp"

#include <string>

#include "wiglab/core/errors.hpp"

namespace wiglab {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

PhaseGrid make_phase_grid(double x_min, double x_max, int n_x,
                          double k_min, double k_max, int n_k) {
    if (!(x_min < x_max) || !(k_min < k_max)) {
        throw config_error("phase grid bounds must be ordered");
    }
    if (n_x < 8 || !power_of_two(n_x)) {
        throw config_error("n_x must be a power of two >= 8, got " + std::to_string(n_x));
    }
    if (n_k < 8 || !power_of_two(n_k)) {
        throw config_error("n_k must be a power of two >= 8, got " + std::to_string(n_k));
    }
    PhaseGrid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.k_min = k_min;
    g.k_max = k_max;
    g.n_x = n_x;
    g.n_k = n_k;
    g.dx = (x_max - x_min) / n_x;
    g.dk = (k_max - k_min) / n_k;
    g.periodic_x = true;
    return g;
}

} // namespace wiglab
