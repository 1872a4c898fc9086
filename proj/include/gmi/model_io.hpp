#pragma once

#include <string>

#include "gmi/interpolant.hpp"

namespace gmi {

// Binary model format "GMIV1" (little-endian):
//   magic   5 bytes "GMIV1"
//   meta    u64: n, p, ref_index, mode, kind, degree, aux_count, stacked_warning
//           f64: map.a, map.b, start_scale, stacked_cond
//   then tagged sections (u64 tag), each matrix as u64 rows, u64 cols,
//   column-major f64 payload:
//     1 chart frame, 2 nodes (rows x 1), 3 recurrence H, 4 coefficients A,
//     0 end of file.
// Doubles are stored bit-exactly, so save/load round trips reproduce
// evaluations bit for bit.
void save_model(const GrassmannInterpolant& interp, const std::string& path);
GrassmannInterpolant load_model(const std::string& path);

// Whitespace-separated text matrix: first line "rows cols", then the entries
// row by row, written with enough digits to round-trip exactly.
Matrix read_matrix_text(const std::string& path);
void write_matrix_text(const Matrix& m, const std::string& path);

}  // namespace gmi
