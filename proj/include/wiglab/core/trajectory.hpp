#pragma once

#include <cstddef>
#include <vector>

namespace wiglab {

/// Uniformly spaced sequence of field snapshots, frame m at time m*dt.
/// Solvers store every step by default; a stride > 1 thins storage while
/// keeping the spacing metadata consistent for time quadrature.
template <class Field>
struct Trajectory {
    double dt = 0.0; // spacing between stored frames
    std::vector<Field> frames;

    std::size_t size() const { return frames.size(); }
    double time(std::size_t m) const { return dt * static_cast<double>(m); }
    const Field& front() const { return frames.front(); }
    const Field& back() const { return frames.back(); }
};

/// Trapezoid weight for frame m of an n-frame trajectory.
inline double trapezoid_weight(std::size_t m, std::size_t n) {
    return (m == 0 || m + 1 == n) ? 0.5 : 1.0;
}

} // namespace wiglab
