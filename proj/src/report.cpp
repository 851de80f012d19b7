#include "qchan/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qchan {

std::string format_g12(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

std::string matrix_block(const ComplexMatrix& m, bool imaginary_part, int indent) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.append(indent, ' ');
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += format_g12(imaginary_part ? m(r, c).imag() : m(r, c).real());
        }
        out += '\n';
    }
    return out;
}

namespace {

void read_block(const std::string& report, const std::string& header, ComplexMatrix& chi,
                bool imaginary_part) {
    const auto pos = report.find(header);
    if (pos == std::string::npos) throw std::runtime_error("report block missing: " + header);
    std::istringstream in(report.substr(pos + header.size()));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double v;
            if (!(in >> v)) throw std::runtime_error("report block truncated: " + header);
            if (imaginary_part)
                chi(r, c) = cdouble(chi(r, c).real(), v);
            else
                chi(r, c) = cdouble(v, chi(r, c).imag());
        }
}

}  // namespace

ComplexMatrix parse_chi_blocks(const std::string& report) {
    ComplexMatrix chi(4, 4);
    read_block(report, "chi_real:\n", chi, false);
    read_block(report, "chi_imag:\n", chi, true);
    return chi;
}

}  // namespace qchan
