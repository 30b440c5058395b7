#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiglab/representatives/representative.hpp"

namespace wiglab {

/// Kernel matrix over translated data pairs: entry (i, j) is the
/// representative generated by initial data centered at centers_i[i] and
/// final data centered at centers_j[j]. Stored row-major over pairs.
struct RepresentativeMatrix {
    std::vector<double> centers_i;
    std::vector<double> centers_j;
    std::vector<Representative> entries; // index = i * centers_j.size() + j
    RepKind kind = RepKind::liouville;
    std::optional<Epsilon> eps;
    std::vector<std::string> warnings;

    int n_i() const { return static_cast<int>(centers_i.size()); }
    int n_j() const { return static_cast<int>(centers_j.size()); }
    int n_x() const { return entries.front().grid.n_x; }
    const Representative& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * centers_j.size() + j];
    }
};

/// Shared solver setup for matrix assembly. The data specs provide the
/// amplitude, widths and momentum centers; the x-centers are replaced per
/// entry. For the wave-equation kind the specs describe wavepackets instead.
struct AssemblyConfig {
    PhaseGrid grid;
    Potential potential;
    double dt = 0.0;
    double t_final = 0.0;
    GaussianSpec f_data;
    GaussianSpec g_data;
    int snapshot_stride = 1;
};

/// Runs one background solve per initial center and one adjoint solve per
/// final center (N_i + N_j solver calls), then computes all N_i * N_j
/// representatives from the cached runs. A failing solve aborts with the
/// offending center in the message.
RepresentativeMatrix assemble_rep_matrix(const std::vector<double>& centers_i,
                                         const std::vector<double>& centers_j,
                                         const AssemblyConfig& config, RepKind kind,
                                         std::optional<Epsilon> eps);

} // namespace wiglab
