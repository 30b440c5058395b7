#pragma once

#include <vector>

#include "wiglab/core/field.hpp"
#include "wiglab/core/potential.hpp"

namespace wiglab {

/// Precomputed spectral multiplier of the collision operator for one
/// (grid, potential, eps) combination; reused across stages of a run.
/// apply() accumulates sign * L_V[f] into out.
class CollisionTable {
public:
    CollisionTable(const PhaseGrid& grid, const Potential& potential, Epsilon eps);

    void apply(const PhaseField& f, PhaseField& out, double sign) const;

private:
    int n_x_;
    int n_k_;
    std::vector<double> delta_; // delta_eps(x_i, y_m), Nyquist bin zeroed
};

} // namespace wiglab
