#include "ellshrink/data_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace ellshrink {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  out = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) {
    return false;
  }
  while (*end == ' ' || *end == '\t') {
    ++end;
  }
  return *end == '\0';
}

bool blank(const std::string& line) {
  for (const char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace

DataMatrix read_data_csv(const std::string& path, bool transpose) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open data file '" + path + "'");
  }

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  bool first_content_line = true;
  while (std::getline(file, line)) {
    ++line_number;
    if (blank(line)) {
      continue;
    }
    const auto fields = split_fields(line);
    std::vector<double> row;
    row.reserve(fields.size());
    bool ok = true;
    std::size_t bad_column = 0;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      double value = 0.0;
      if (!parse_double(fields[j], value)) {
        ok = false;
        bad_column = j;
        break;
      }
      row.push_back(value);
    }
    if (!ok) {
      if (first_content_line) {
        // Non-numeric first line: header, skip it.
        first_content_line = false;
        continue;
      }
      std::ostringstream msg;
      msg << path << ": line " << line_number << ", column " << bad_column + 1
          << ": cannot parse '" << fields[bad_column] << "' as a number";
      throw IoError(msg.str());
    }
    first_content_line = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << path << ": line " << line_number << ": expected " << rows.front().size()
          << " fields, got " << row.size();
      throw IoError(msg.str());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw IoError(path + ": no numeric rows found");
  }

  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd m(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  if (transpose) {
    m = m.transpose().eval();
  }
  return DataMatrix(std::move(m));
}

void write_matrix_csv(const Eigen::MatrixXd& matrix, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  char buf[64];
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", matrix(i, j));
      file << buf;
      if (j + 1 < matrix.cols()) {
        file << ',';
      }
    }
    file << '\n';
  }
  if (!file) {
    throw IoError("write to '" + path + "' failed");
  }
}

Eigen::MatrixXd read_matrix_csv(const std::string& path) {
  return read_data_csv(path, false).rows();
}

}  // namespace ellshrink
