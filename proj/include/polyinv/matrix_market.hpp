#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "polyinv/errors.hpp"
#include "polyinv/scalar.hpp"
#include "polyinv/sparse_matrix.hpp"

namespace polyinv {

namespace detail {

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

} // namespace detail

struct MatrixMarketHeader {
  bool complex_field = false;
  bool integer_field = false;
  std::string symmetry; // general | symmetric | skew-symmetric | hermitian
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t entries = 0;
};

inline MatrixMarketHeader read_matrix_market_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw IoError("matrix market: empty file");
  }
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (detail::lower(tag) != "%%matrixmarket" || detail::lower(object) != "matrix") {
    throw IoError("matrix market: malformed banner");
  }
  if (detail::lower(format) != "coordinate") {
    throw IoError("matrix market: only coordinate format is supported");
  }
  MatrixMarketHeader hdr;
  const std::string f = detail::lower(field);
  if (f == "real") {
  } else if (f == "complex") {
    hdr.complex_field = true;
  } else if (f == "integer") {
    hdr.integer_field = true;
  } else {
    throw IoError("matrix market: unsupported field '" + f + "'");
  }
  hdr.symmetry = detail::lower(symmetry);
  if (hdr.symmetry != "general" && hdr.symmetry != "symmetric" &&
      hdr.symmetry != "skew-symmetric" && hdr.symmetry != "hermitian") {
    throw IoError("matrix market: unknown symmetry '" + hdr.symmetry + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '%') {
      continue;
    }
    // skip blank lines before the size line
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank) {
      continue;
    }
    std::istringstream sz(line);
    if (!(sz >> hdr.rows >> hdr.cols >> hdr.entries)) {
      throw IoError("matrix market: malformed size line");
    }
    return hdr;
  }
  throw IoError("matrix market: missing size line");
}

/// Read a Matrix Market coordinate file. Symmetric / skew-symmetric /
/// hermitian storage is expanded to full; 1-based indices are converted;
/// duplicate entries are summed. Pattern matrices are rejected. Reading a
/// complex file as real scalar type is an error.
template <typename S>
SparseMatrix<S> read_matrix_market(std::istream& in) {
  const MatrixMarketHeader hdr = read_matrix_market_header(in);
  if (hdr.complex_field && !is_complex_v<S>) {
    throw IoError("matrix market: complex file read with real scalar type");
  }
  std::vector<std::tuple<std::size_t, std::size_t, S>> trips;
  trips.reserve(hdr.entries * (hdr.symmetry == "general" ? 1 : 2));
  std::string line;
  std::size_t seen = 0;
  while (seen < hdr.entries && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') {
      continue;
    }
    std::istringstream ls(line);
    long long i, j;
    if (!(ls >> i >> j)) {
      continue; // blank line
    }
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) {
      throw IoError("matrix market: missing value on entry line");
    }
    if (hdr.complex_field && !(ls >> im)) {
      throw IoError("matrix market: missing imaginary part");
    }
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > hdr.rows ||
        static_cast<std::size_t>(j) > hdr.cols) {
      throw IoError("matrix market: index out of range");
    }
    ++seen;
    const std::size_t r = static_cast<std::size_t>(i) - 1;
    const std::size_t c = static_cast<std::size_t>(j) - 1;
    S v;
    if constexpr (is_complex_v<S>) {
      v = S(re, im);
    } else {
      v = static_cast<S>(re);
    }
    trips.emplace_back(r, c, v);
    if (r != c) {
      if (hdr.symmetry == "symmetric") {
        trips.emplace_back(c, r, v);
      } else if (hdr.symmetry == "skew-symmetric") {
        trips.emplace_back(c, r, -v);
      } else if (hdr.symmetry == "hermitian") {
        trips.emplace_back(c, r, conjugate(v));
      }
    }
  }
  if (seen != hdr.entries) {
    throw IoError("matrix market: fewer entries than declared");
  }
  return SparseMatrix<S>::from_triplets(hdr.rows, hdr.cols, std::move(trips));
}

template <typename S>
SparseMatrix<S> read_matrix_market(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw IoError("matrix market: cannot open '" + path + "'");
  }
  return read_matrix_market<S>(f);
}

/// True when the file stores complex values.
inline bool matrix_market_is_complex(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw IoError("matrix market: cannot open '" + path + "'");
  }
  return read_matrix_market_header(f).complex_field;
}

/// Write full (general) coordinate storage with 17 significant digits so a
/// write/read round trip reproduces values bit-exactly.
template <typename S>
void write_matrix_market(std::ostream& out, const SparseMatrix<S>& a) {
  out << "%%MatrixMarket matrix coordinate "
      << (is_complex_v<S> ? "complex" : "real") << " general\n";
  out << a.n_rows() << " " << a.n_cols() << " " << a.nnz() << "\n";
  char buf[128];
  for (std::size_t i = 0; i < a.n_rows(); ++i) {
    for (std::size_t k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k) {
      const S v = a.values()[k];
      if constexpr (is_complex_v<S>) {
        std::snprintf(buf, sizeof(buf), "%zu %zu %.16e %.16e\n", i + 1,
                      a.col_idx()[k] + 1, real_part(v), imag_part(v));
      } else {
        std::snprintf(buf, sizeof(buf), "%zu %zu %.16e\n", i + 1,
                      a.col_idx()[k] + 1, static_cast<double>(v));
      }
      out << buf;
    }
  }
}

template <typename S>
void write_matrix_market(const std::string& path, const SparseMatrix<S>& a) {
  std::ofstream f(path);
  if (!f) {
    throw IoError("matrix market: cannot open '" + path + "' for writing");
  }
  write_matrix_market(f, a);
}

} // namespace polyinv
