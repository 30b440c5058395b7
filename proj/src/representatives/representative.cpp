#include "wiglab/representatives/representative.hpp"

#include <cmath>
#include <numbers>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/fft.hpp"
#include "wiglab/core/parallel.hpp"
#include "wiglab/core/spectral.hpp"
#include "wiglab/wigner/transform.hpp"

namespace wiglab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class Run>
void check_paired_runs(const Run& background, const Run& adjoint, const char* what) {
    if (!(background.snapshots.frames.front().grid ==
          adjoint.snapshots.frames.front().grid)) {
        throw config_error(std::string(what) + ": runs on different grids");
    }
    if (background.snapshots.dt != adjoint.snapshots.dt ||
        background.snapshots.size() != adjoint.snapshots.size()) {
        throw config_error(std::string(what) + ": runs with different time sampling");
    }
}

} // namespace

double rep_l2_norm(const Representative& r) {
    double acc = 0.0;
    for (const cplx& v : r.values) acc += std::norm(v);
    return std::sqrt(acc * r.grid.dx);
}

cplx rep_integral(const Representative& r) {
    cplx acc{0.0, 0.0};
    for (const cplx& v : r.values) acc += v;
    return acc * r.grid.dx;
}

cplx rep_pair(const Representative& r, const Potential& vtilde) {
    cplx acc{0.0, 0.0};
    for (int i = 0; i < r.grid.n_x; ++i) {
        acc += vtilde.eval(r.grid.x(i)) * r.values[i];
    }
    return acc * r.grid.dx;
}

Representative rep_schrodinger(const SchrodingerRun& background,
                               const SchrodingerRun& adjoint, Epsilon eps) {
    check_paired_runs(background, adjoint, "rep_schrodinger");
    const auto& fb = background.snapshots;
    const auto& psi = adjoint.snapshots;
    const PhaseGrid& grid = fb.front().grid;

    Representative rep{grid, std::vector<cplx>(grid.n_x), RepKind::schrodinger, eps,
                       "", ""};
    const size_t n = fb.size();
    for (size_t m = 0; m < n; ++m) {
        const double w = trapezoid_weight(m, n) * fb.dt;
        for (int i = 0; i < grid.n_x; ++i) {
            rep.values[i] += w * fb.frames[m].values[i] *
                             std::conj(psi.frames[m].values[i]);
        }
    }
    const cplx inv_i_eps = 1.0 / (cplx{0.0, 1.0} * eps.value);
    for (cplx& v : rep.values) v *= inv_i_eps;
    return rep;
}

Representative rep_wigner(const WignerRun& background, const WignerRun& adjoint,
                          Epsilon eps) {
    check_paired_runs(background, adjoint, "rep_wigner");
    if (background.eps.value != adjoint.eps.value ||
        background.eps.value != eps.value) {
        throw config_error("rep_wigner: runs computed at different eps");
    }
    const PhaseGrid& grid = background.snapshots.frames.front().grid;
    const int n_x = grid.n_x;
    const int n_k = grid.n_k;
    const size_t n_frames = background.snapshots.size();
    const double frame_dt = background.snapshots.dt;
    const double dy = kTwoPi / grid.k_length();

    // Spectral accumulator over x-frequency bins q across all frames and
    // y-nodes. The constant-shift gauge shows up as an exactly zero q = 0 bin.
    std::vector<cplx> acc(static_cast<size_t>(n_x), cplx{0.0, 0.0});

    std::vector<cplx> fhat(static_cast<size_t>(n_x) * n_k);
    std::vector<cplx> ghat(static_cast<size_t>(n_x) * n_k);
    for (size_t m = 0; m < n_frames; ++m) {
        const PhaseField& f = background.snapshots.frames[m];
        const PhaseField& g = adjoint.snapshots.frames[m];
        // k -> y transforms per x-column; offset phases cancel in conj(G)*F.
        parallel_for(static_cast<size_t>(n_x), [&](size_t i) {
            cplx* frow = fhat.data() + i * n_k;
            cplx* grow = ghat.data() + i * n_k;
            std::copy_n(f.values.data() + i * n_k, n_k, frow);
            std::copy_n(g.values.data() + i * n_k, n_k, grow);
            fft_forward(std::span<cplx>(frow, static_cast<size_t>(n_k)));
            fft_forward(std::span<cplx>(grow, static_cast<size_t>(n_k)));
        });

        const double wt = trapezoid_weight(m, n_frames) * frame_dt * dy;
        const double dk2 = grid.dk * grid.dk;
        // Rows land in disjoint slots; the reduction below runs in a fixed
        // order so results do not depend on the thread count.
        std::vector<cplx> rows(static_cast<size_t>(n_k) * n_x, cplx{0.0, 0.0});
        parallel_for(static_cast<size_t>(n_k), [&](size_t my) {
            if (static_cast<int>(my) == n_k / 2) return; // unpaired odd bin
            const double y = grid.y(static_cast<int>(my));
            std::span<cplx> row(rows.data() + my * n_x, static_cast<size_t>(n_x));
            for (int i = 0; i < n_x; ++i) {
                row[i] = dk2 * std::conj(ghat[static_cast<size_t>(i) * n_k + my]) *
                         fhat[static_cast<size_t>(i) * n_k + my];
            }
            fft_forward(row);
            // Difference of the two half-shifts in z: multiplier
            // e^{-i xi s} - e^{+i xi s} = -2i sin(xi s), s = eps y / 2.
            const double s = 0.5 * eps.value * y;
            for (int q = 0; q < n_x; ++q) {
                if (q == n_x / 2) {
                    row[q] = cplx{0.0, 0.0};
                } else {
                    row[q] *= cplx{0.0, -2.0 * std::sin(grid.xi(q) * s)};
                }
            }
        });
        for (int my = 0; my < n_k; ++my) {
            const cplx* row = rows.data() + static_cast<size_t>(my) * n_x;
            for (int q = 0; q < n_x; ++q) acc[q] += wt * row[q];
        }
    }

    fft_inverse(acc);
    Representative rep{grid, std::move(acc), RepKind::wigner, eps, "", ""};
    const cplx scale = cplx{0.0, 1.0} / (kTwoPi * eps.value);
    for (cplx& v : rep.values) v *= scale;
    return rep;
}

Representative rep_wigner_oracle(const WignerRun& background, const WignerRun& adjoint,
                                 Epsilon eps, int cell_cap) {
    check_paired_runs(background, adjoint, "rep_wigner_oracle");
    if (background.eps.value != adjoint.eps.value ||
        background.eps.value != eps.value) {
        throw config_error("rep_wigner_oracle: runs computed at different eps");
    }
    const PhaseGrid& grid = background.snapshots.frames.front().grid;
    const int n_x = grid.n_x;
    const int n_k = grid.n_k;
    if (n_x * n_k > cell_cap) {
        throw oracle_cap_error("rep_wigner_oracle: grid exceeds the cost cap");
    }
    const size_t n_frames = background.snapshots.size();
    const double frame_dt = background.snapshots.dt;
    const double dp = kTwoPi / grid.x_length();

    std::vector<cplx> values(static_cast<size_t>(n_x), cplx{0.0, 0.0});
    for (size_t m = 0; m < n_frames; ++m) {
        const PhaseField& f = background.snapshots.frames[m];
        const PhaseField& g = adjoint.snapshots.frames[m];
        const double wt = trapezoid_weight(m, n_frames) * frame_dt;
        for (int r = 0; r < n_x; ++r) {
            const double p = grid.xi(r);
            const double half = 0.5 * eps.value * p;
            const PhaseField plus = spectral_shift_k(f, -half);
            const PhaseField minus = spectral_shift_k(f, half);
            // z-profile of the (k-integrated) pairing at this p.
            std::vector<cplx> s_of_z(static_cast<size_t>(n_x));
            for (int i = 0; i < n_x; ++i) {
                cplx acc_k{0.0, 0.0};
                for (int j = 0; j < n_k; ++j) {
                    const cplx d =
                        (plus.at(i, j) - minus.at(i, j)) / eps.value;
                    acc_k += std::conj(g.at(i, j)) * d;
                }
                s_of_z[i] = acc_k * grid.dk;
            }
            cplx zsum{0.0, 0.0};
            for (int i = 0; i < n_x; ++i) {
                zsum += s_of_z[i] * std::polar(1.0, p * grid.x(i)) * grid.dx;
            }
            const cplx common = cplx{0.0, 1.0} / kTwoPi * wt * dp * zsum;
            for (int l = 0; l < n_x; ++l) {
                values[l] += common * std::polar(1.0, -p * grid.x(l));
            }
        }
    }
    return Representative{grid, std::move(values), RepKind::wigner, eps, "", ""};
}

Representative rep_liouville(const LiouvilleRun& background,
                             const LiouvilleRun& adjoint) {
    check_paired_runs(background, adjoint, "rep_liouville");
    const PhaseGrid& grid = background.snapshots.frames.front().grid;
    const size_t n_frames = background.snapshots.size();
    const double frame_dt = background.snapshots.dt;

    std::vector<cplx> profile(static_cast<size_t>(grid.n_x), cplx{0.0, 0.0});
    for (size_t m = 0; m < n_frames; ++m) {
        const PhaseField dfk = spectral_derivative_k(background.snapshots.frames[m]);
        const PhaseField& g = adjoint.snapshots.frames[m];
        const double w = trapezoid_weight(m, n_frames) * frame_dt * grid.dk;
        for (int i = 0; i < grid.n_x; ++i) {
            cplx acc{0.0, 0.0};
            for (int j = 0; j < grid.n_k; ++j) {
                acc += std::conj(g.at(i, j)) * dfk.at(i, j);
            }
            profile[i] += w * acc;
        }
    }
    spectral_derivative_row(profile, grid.x_length());
    for (cplx& v : profile) v = -v;
    return Representative{grid, std::move(profile), RepKind::liouville, std::nullopt,
                          "", ""};
}

double check_wigner_schrodinger_identity(const ComplexField& phi_i,
                                         const ComplexField& phi_i_prime,
                                         const ComplexField& psi_t,
                                         const ComplexField& psi_t_prime,
                                         const Potential& v_b, Epsilon eps,
                                         double dt, double t_final) {
    const PhaseGrid& grid = phi_i.grid;
    if (!(phi_i_prime.grid == grid) || !(psi_t.grid == grid) ||
        !(psi_t_prime.grid == grid)) {
        throw config_error("identity check: wave data on mismatched grids");
    }

    const auto bg = solve_schrodinger(phi_i, v_b, eps, dt, t_final, Direction::forward);
    const auto bg_p =
        solve_schrodinger(phi_i_prime, v_b, eps, dt, t_final, Direction::forward);
    const auto adj = solve_schrodinger(psi_t, v_b, eps, dt, t_final, Direction::backward);
    const auto adj_p =
        solve_schrodinger(psi_t_prime, v_b, eps, dt, t_final, Direction::backward);

    const PhaseField f_i = wigner_transform(phi_i, adj_p.snapshots.front(), eps, grid);
    const PhaseField g_t = wigner_transform(psi_t, bg_p.snapshots.back(), eps, grid);

    const auto wig_bg = solve_wigner(f_i, v_b, eps, dt, t_final, Direction::forward);
    const auto wig_adj = solve_wigner(g_t, v_b, eps, dt, t_final, Direction::backward);
    const Representative r_w = rep_wigner(wig_bg, wig_adj, eps);

    const Representative r_s = rep_schrodinger(bg, adj, eps);
    const Representative r_s_p = rep_schrodinger(bg_p, adj_p, eps);

    const cplx c_prime = l2_inner_product(phi_i_prime, adj_p.snapshots.front());
    const cplx c_plain = l2_inner_product(phi_i, adj.snapshots.front());

    const double lhs_scale = kTwoPi * eps.value;
    double diff2 = 0.0, rhs2 = 0.0, lhs2 = 0.0;
    for (int i = 0; i < grid.n_x; ++i) {
        const cplx lhs = lhs_scale * r_w.values[i];
        const cplx rhs = c_prime * r_s.values[i] - c_plain * r_s_p.values[i];
        diff2 += std::norm(lhs - rhs);
        rhs2 += std::norm(rhs);
        lhs2 += std::norm(lhs);
    }
    const double rhs_norm = std::sqrt(rhs2 * grid.dx);
    const double lhs_norm = std::sqrt(lhs2 * grid.dx);
    if (rhs_norm < 1e-14) {
        if (lhs_norm < 1e-14) return 0.0; // both sides vanish by convention
        throw degenerate_error("identity check: right-hand side degenerate");
    }
    return std::sqrt(diff2 * grid.dx) / rhs_norm;
}

} // namespace wiglab
