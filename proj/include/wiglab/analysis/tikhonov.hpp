#pragma once

#include <vector>

#include "wiglab/analysis/rep_matrix.hpp"

namespace wiglab {

struct TikhonovResult {
    std::vector<double> vtilde;      // minimizer sampled on the x-grid
    bool pseudo_inverse = false;     // lambda = 0 fell back to minimal norm
};

/// Least-squares inversion of the assembled pairings: minimizes
///   sum_ij |Int vtilde R_ij dx - data_ij|^2 + lambda ||vtilde||_L2^2
/// by quadrature-weighted normal equations. Complex kernels contribute their
/// real and imaginary parts as separate rows. With lambda = 0 a rank-
/// deficient system falls back to the minimal-norm solution and is flagged.
TikhonovResult tikhonov_reconstruct(const RepresentativeMatrix& m,
                                    const std::vector<cplx>& data, double lambda);

} // namespace wiglab
