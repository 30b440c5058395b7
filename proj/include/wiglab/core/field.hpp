#pragma once

#include <complex>
#include <vector>

#include "wiglab/core/grid.hpp"

namespace wiglab {

using cplx = std::complex<double>;

/// Complex wavefunction sampled on the x-axis of a PhaseGrid.
struct ComplexField {
    PhaseGrid grid;
    std::vector<cplx> values; // length n_x

    static ComplexField zeros(const PhaseGrid& g) {
        return ComplexField{g, std::vector<cplx>(static_cast<size_t>(g.n_x))};
    }
};

/// Scalar field on the full phase grid, x-major layout (k contiguous).
/// Physical distributions are real; complex storage keeps transform-built
/// fields exact. hermitian_real marks fields known real up to roundoff.
struct PhaseField {
    PhaseGrid grid;
    std::vector<cplx> values; // length n_x * n_k, index = i * n_k + j
    bool hermitian_real = false;

    size_t idx(int i, int j) const { return static_cast<size_t>(i) * grid.n_k + j; }
    cplx& at(int i, int j) { return values[idx(i, j)]; }
    const cplx& at(int i, int j) const { return values[idx(i, j)]; }

    static PhaseField zeros(const PhaseGrid& g, bool hermitian_real = false) {
        return PhaseField{g, std::vector<cplx>(static_cast<size_t>(g.n_x) * g.n_k),
                          hermitian_real};
    }
};

/// Left-endpoint quadrature of a*conj(b)*dx; exact for periodic band-limited
/// integrands. Linear in the first argument, conjugate-linear in the second.
/// Throws config_error on grid mismatch.
cplx l2_inner_product(const ComplexField& a, const ComplexField& b);

double l2_norm(const ComplexField& a);

/// Phase-space pairing sum f*conj(g)*dx*dk.
cplx phase_inner_product(const PhaseField& f, const PhaseField& g);

/// Discrete mass sum f*dx*dk (complex for complex fields).
cplx phase_mass(const PhaseField& f);

double phase_l2_norm(const PhaseField& f);

double max_abs(const ComplexField& a);
double max_abs(const PhaseField& f);
double max_abs_imag(const PhaseField& f);

} // namespace wiglab
