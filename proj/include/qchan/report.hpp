#pragma once

#include <string>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

/// Decimal with 12 significant digits; round-trips every tolerance used
/// in this library.
std::string format_g12(double v);

/// RFC-4180 field quoting (quotes fields containing comma, quote or
/// newline; doubles embedded quotes).
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

/// Four indented rows of four numbers, as used for chi blocks in the
/// structured report format.
std::string matrix_block(const ComplexMatrix& m, bool imaginary_part, int indent = 2);

/// Reads a 4x4 matrix back from the `chi_real:` / `chi_imag:` blocks of
/// a report. Throws std::runtime_error if a block is missing.
ComplexMatrix parse_chi_blocks(const std::string& report);

}  // namespace qchan
