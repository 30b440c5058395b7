#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiglab/liouville/solver.hpp"
#include "wiglab/schrodinger/solver.hpp"
#include "wiglab/wigner/solver.hpp"

namespace wiglab {

enum class RepKind { schrodinger, wigner, liouville };

/// Kernel of the linear pairing between a potential perturbation and one
/// (initial data, final data) experiment: the measured mismatch equals
/// Int vtilde(x) R(x) dx. Wigner and Liouville kernels are real for real
/// data; the wave-equation kernel stays complex.
struct Representative {
    PhaseGrid grid;
    std::vector<cplx> values; // over the x-axis
    RepKind kind = RepKind::liouville;
    std::optional<Epsilon> eps;
    std::string init_id;  // provenance of the generating initial data
    std::string final_id; // provenance of the generating final data
};

double rep_l2_norm(const Representative& r);
cplx rep_integral(const Representative& r); // sum values * dx

/// Pairs Int vtilde * R dx for vtilde sampled on the x-grid.
cplx rep_pair(const Representative& r, const Potential& vtilde);

/// R(x) = (1/(i eps)) * trapezoid_t of phi_b(t,x) * conj(psi)(t,x).
/// Runs must share grid, snapshot spacing and horizon.
Representative rep_schrodinger(const SchrodingerRun& background,
                               const SchrodingerRun& adjoint, Epsilon eps);

/// Phase-space kernel
///   R(x) = (i/2pi) Int e^{ip(z-x)} conj(g)(z,k) D_eps f_b(z,k,p) dp dz dk dt
/// evaluated through the mixed k-dual representation: with
/// P(z,y) = conj(G)(z,y) F(z,y) the kernel reduces to
/// (i/(2 pi eps)) Int [P(x - eps y/2, y) - P(x + eps y/2, y)] dy dt, which is
/// accumulated as a spectral multiplier in x. Matches rep_wigner_oracle to
/// quadrature roundoff on any shared grid.
Representative rep_wigner(const WignerRun& background, const WignerRun& adjoint,
                          Epsilon eps);

/// Literal nested quadrature of the defining integral over the discrete
/// (p, z, k, t) lattice with the k-difference taken by spectral shifts.
/// Ground truth for rep_wigner; refuses grids with n_x*n_k above the cap.
Representative rep_wigner_oracle(const WignerRun& background, const WignerRun& adjoint,
                                 Epsilon eps, int cell_cap = 128 * 128);

/// R(x) = -d/dx [ trapezoid_t of sum_k conj(g) df_b/dk dk ], spectral
/// derivatives on both axes.
Representative rep_liouville(const LiouvilleRun& background,
                             const LiouvilleRun& adjoint);

/// Numerical check of the wave-to-phase-space kernel identity: with
/// f_I = W[phi_I, psi'(0)] and g_T = W[psi_T, phi_b'(T)],
///   (2 pi eps) R_W[f_I, g_T]
///     = <phi_I', psi'(0)> R_S[phi_I, psi_T] - <phi_I, psi(0)> R_S[phi_I', psi_T'].
/// Returns ||LHS - RHS||_2 / ||RHS||_2 (0 when both sides vanish); throws
/// degenerate_error when only the right side degenerates.
double check_wigner_schrodinger_identity(const ComplexField& phi_i,
                                         const ComplexField& phi_i_prime,
                                         const ComplexField& psi_t,
                                         const ComplexField& psi_t_prime,
                                         const Potential& v_b, Epsilon eps,
                                         double dt, double t_final);

} // namespace wiglab
