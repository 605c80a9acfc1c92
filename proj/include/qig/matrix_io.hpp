#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qig/errors.hpp"
#include "qig/states.hpp"

namespace qig {

/// Plain-text matrix document:
///
///   dim 2
///   kind density
///   (0.9, 0) (0, 0)
///   (0, 0) (0.1, 0)
///
/// Entries are row-major "(re, im)" pairs, written with 17 significant
/// digits so a write/read cycle reproduces every double exactly. kind is
/// "density" or "observable"; the corresponding invariants are enforced
/// when converting to a typed object.
struct MatrixFile {
  int dim = 0;
  std::string kind;
  Matrix entries;

  DensityMatrix as_density() const {
    if (kind != "density")
      throw FormatError("matrix file is not of kind 'density'", 2);
    return DensityMatrix(entries);
  }
  Observable as_observable() const {
    if (kind != "observable" && kind != "density")
      throw FormatError("matrix file is not a density or observable", 2);
    return Observable(entries);
  }
};

inline void write_matrix(std::ostream& os, const std::string& kind,
                         const Matrix& m) {
  os << "dim " << m.rows() << "\n";
  os << "kind " << kind << "\n";
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", m(i, j).real(),
                    m(i, j).imag());
      os << buf << (j + 1 < m.cols() ? " " : "");
    }
    os << "\n";
  }
}

inline MatrixFile read_matrix(std::istream& is) {
  MatrixFile out;
  std::string line;
  int lineno = 0;

  auto next_line = [&](const char* what) {
    if (!std::getline(is, line))
      throw FormatError(std::string("unexpected end of file, expected ") + what,
                        lineno + 1);
    ++lineno;
  };

  next_line("'dim <n>'");
  {
    std::istringstream ss(line);
    std::string key;
    ss >> key >> out.dim;
    if (key != "dim" || ss.fail() || out.dim < 1)
      throw FormatError("expected 'dim <positive integer>'", lineno);
  }
  next_line("'kind density|observable'");
  {
    std::istringstream ss(line);
    std::string key;
    ss >> key >> out.kind;
    if (key != "kind" || (out.kind != "density" && out.kind != "observable"))
      throw FormatError("expected 'kind density' or 'kind observable'", lineno);
  }

  out.entries = Matrix(out.dim, out.dim);
  int row = 0, col = 0;
  while (row < out.dim) {
    next_line("matrix entries");
    std::istringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ')')) {
      const auto open = token.find('(');
      if (open == std::string::npos) {
        // allow trailing whitespace between pairs
        if (token.find_first_not_of(" \t\r") != std::string::npos)
          throw FormatError("malformed entry, expected '(re, im)'", lineno);
        continue;
      }
      std::string body = token.substr(open + 1);
      for (auto& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream pair(body);
      double re = 0.0, im = 0.0;
      pair >> re >> im;
      if (pair.fail())
        throw FormatError("could not parse '(re, im)' pair", lineno);
      if (row >= out.dim)
        throw FormatError("more entries than dim*dim", lineno);
      out.entries(row, col) = Complex(re, im);
      if (++col == out.dim) {
        col = 0;
        ++row;
      }
    }
  }
  return out;
}

inline MatrixFile load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path, 0);
  return read_matrix(in);
}

inline void save_matrix(const std::string& path, const std::string& kind,
                        const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open file for writing: " + path, 0);
  write_matrix(out, kind, m);
}

}  // namespace qig
