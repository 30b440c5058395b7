#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wiglab/analysis/rep_matrix.hpp"

namespace wiglab {

/// Singular values of the pair-by-x kernel matrix (rows weighted by sqrt(dx)
/// so the decomposition respects the continuum pairing), divided by the
/// largest; descending. Throws degenerate_error on an all-zero matrix.
std::vector<double> relative_singular_values(const RepresentativeMatrix& m);

/// Relative singular-value convergence curves |s_i(eps) - s_i| / |s_i|
/// against the limit matrix, for 1-based indices (default 2..5). Indices
/// with a vanishing limit value are skipped with a warning.
struct SingularValueErrors {
    std::vector<double> eps_values;
    std::vector<int> indices;
    std::map<int, std::vector<double>> errors; // index -> curve over eps
    std::vector<std::string> warnings;
};
SingularValueErrors singular_value_errors(
    const std::vector<std::pair<double, RepresentativeMatrix>>& sweep,
    const RepresentativeMatrix& limit, std::vector<int> indices = {2, 3, 4, 5});

/// Projection defect || Q_k - Q_k^a (Q_k^a)^T Q_k ||_2 between the spans of
/// the leading k left singular vectors of the two matrices. Symmetric in its
/// arguments; zero iff the subspaces agree. Throws degenerate_error when k
/// exceeds the numerical rank (sigma_k < 1e-12 sigma_1) of either matrix.
double subspace_angle(const RepresentativeMatrix& limit,
                      const RepresentativeMatrix& approx, int k);

/// Convergence summary of an eps sweep: least-squares slope of log2(err)
/// against log2(eps), plus optional per-index singular-value and subspace
/// diagnostics filled by the study pipelines.
struct ConvergenceReport {
    std::vector<double> eps_values;
    std::vector<double> err_values;
    double fitted_slope = 0.0;
    std::map<int, std::vector<double>> sv_errors;
    std::map<int, std::vector<double>> subspace_angles;
};

/// Fits the decay rate. Requires at least three points, strictly decreasing
/// eps and positive errors.
ConvergenceReport err_curve_and_slope(const std::vector<double>& eps_values,
                                      const std::vector<double>& errs);

} // namespace wiglab
