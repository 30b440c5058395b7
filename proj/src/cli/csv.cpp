#include "wiglab/cli/csv.hpp"

#include <cstdio>
#include <fstream>

#include "wiglab/core/errors.hpp"

namespace wiglab {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

} // namespace

std::string csv_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_kernel_csv(const std::string& path, const Representative& rep) {
    std::ofstream out = open_out(path);
    const bool complex_kind = rep.kind == RepKind::schrodinger;
    out << (complex_kind ? "x,re,im\n" : "x,value\n");
    for (int i = 0; i < rep.grid.n_x; ++i) {
        out << csv_float(rep.grid.x(i)) << ',';
        if (complex_kind) {
            out << csv_float(rep.values[i].real()) << ','
                << csv_float(rep.values[i].imag()) << '\n';
        } else {
            out << csv_float(rep.values[i].real()) << '\n';
        }
    }
}

void write_phase_field_csv(const std::string& path, const PhaseField& f) {
    std::ofstream out = open_out(path);
    const bool complex_field = !f.hermitian_real;
    out << (complex_field ? "x,k,re,im\n" : "x,k,value\n");
    for (int i = 0; i < f.grid.n_x; ++i) {
        for (int j = 0; j < f.grid.n_k; ++j) {
            out << csv_float(f.grid.x(i)) << ',' << csv_float(f.grid.k(j)) << ',';
            if (complex_field) {
                out << csv_float(f.at(i, j).real()) << ','
                    << csv_float(f.at(i, j).imag()) << '\n';
            } else {
                out << csv_float(f.at(i, j).real()) << '\n';
            }
        }
    }
}

void write_wavefunction_csv(const std::string& path, const ComplexField& f) {
    std::ofstream out = open_out(path);
    out << "x,re,im\n";
    for (int i = 0; i < f.grid.n_x; ++i) {
        out << csv_float(f.grid.x(i)) << ',' << csv_float(f.values[i].real()) << ','
            << csv_float(f.values[i].imag()) << '\n';
    }
}

void write_curve_csv(const std::string& path, const std::vector<double>& eps,
                     const std::vector<double>& err, double slope) {
    std::ofstream out = open_out(path);
    out << "eps,err\n";
    for (size_t i = 0; i < eps.size(); ++i) {
        out << csv_float(eps[i]) << ',' << csv_float(err[i]) << '\n';
    }
    out << "# slope = " << csv_float(slope) << '\n';
}

void write_real_profile_csv(
    const std::string& path, const PhaseGrid& grid,
    const std::vector<std::pair<std::string, std::vector<double>>>& columns) {
    std::ofstream out = open_out(path);
    out << "x";
    for (const auto& [name, values] : columns) out << ',' << name;
    out << '\n';
    for (int i = 0; i < grid.n_x; ++i) {
        out << csv_float(grid.x(i));
        for (const auto& [name, values] : columns) out << ',' << csv_float(values[i]);
        out << '\n';
    }
}

void write_matrix_csv(const std::string& path, const std::string& index_path,
                      const RepresentativeMatrix& m) {
    const bool complex_kind = m.kind == RepKind::schrodinger;
    {
        std::ofstream out = open_out(path);
        const int n_x = m.n_x();
        for (int c = 0; c < n_x; ++c) {
            if (c) out << ',';
            out << (complex_kind ? "re_" : "v_") << c;
            if (complex_kind) out << ",im_" << c;
        }
        out << '\n';
        for (const Representative& rep : m.entries) {
            for (int c = 0; c < n_x; ++c) {
                if (c) out << ',';
                out << csv_float(rep.values[c].real());
                if (complex_kind) out << ',' << csv_float(rep.values[c].imag());
            }
            out << '\n';
        }
    }
    std::ofstream idx = open_out(index_path);
    idx << "row,i,j,center_i,center_j\n";
    for (int i = 0; i < m.n_i(); ++i) {
        for (int j = 0; j < m.n_j(); ++j) {
            idx << i * m.n_j() + j << ',' << i << ',' << j << ','
                << csv_float(m.centers_i[i]) << ',' << csv_float(m.centers_j[j])
                << '\n';
        }
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_out(path);
    out << content;
}

} // namespace wiglab
