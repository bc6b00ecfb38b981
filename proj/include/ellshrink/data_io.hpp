#pragma once

#include <string>

#include "ellshrink/types.hpp"

namespace ellshrink {

/// Read a numeric CSV into a data matrix, rows = observations. A first
/// line with any non-numeric field is treated as a header and skipped.
/// `transpose` flips variable-major files into row-observation layout.
/// Throws IoError with row/column context on parse failure.
DataMatrix read_data_csv(const std::string& path, bool transpose = false);

/// Write a matrix as CSV with 17 significant digits per entry.
void write_matrix_csv(const Eigen::MatrixXd& matrix, const std::string& path);

/// Parse a matrix back from the CSV written by write_matrix_csv.
Eigen::MatrixXd read_matrix_csv(const std::string& path);

}  // namespace ellshrink
