#pragma once

#include "wiglab/core/field.hpp"

namespace wiglab {

/// Catmull-Rom bicubic evaluation of a sampled phase field at an off-grid
/// point, periodic in both axes. Real part of the samples.
double bicubic_eval(const PhaseField& f, double x, double k);

/// Wraps a coordinate into [lo, lo + period).
double periodic_wrap(double value, double lo, double period);

} // namespace wiglab
