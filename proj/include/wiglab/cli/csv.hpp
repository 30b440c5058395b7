#pragma once

#include <string>
#include <vector>

#include "wiglab/analysis/convergence.hpp"
#include "wiglab/analysis/rep_matrix.hpp"
#include "wiglab/representatives/representative.hpp"

namespace wiglab {

/// Result files are UTF-8 CSV with LF endings, one header line and decimal
/// floats printed with 17 significant digits so values round-trip exactly.
std::string csv_float(double v);

void write_kernel_csv(const std::string& path, const Representative& rep);
void write_phase_field_csv(const std::string& path, const PhaseField& f);
void write_wavefunction_csv(const std::string& path, const ComplexField& f);
void write_curve_csv(const std::string& path, const std::vector<double>& eps,
                     const std::vector<double>& err, double slope);
void write_real_profile_csv(const std::string& path, const PhaseGrid& grid,
                            const std::vector<std::pair<std::string, std::vector<double>>>& columns);

/// Flat matrix CSV (one row per (i, j) pair) plus a sidecar index file
/// mapping rows to centers.
void write_matrix_csv(const std::string& path, const std::string& index_path,
                      const RepresentativeMatrix& m);

void write_text_file(const std::string& path, const std::string& content);

} // namespace wiglab
