#pragma once

#include "hsbp/types.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace hsbp {

/// Matrix Market coordinate export (1-based indices).
inline void write_matrix_market(const SpMat& A, const std::string& path) {
  std::ofstream out(path);
  require(bool(out), "mmio", "cannot open '" + path + "' for writing");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << A.rows() << " " << A.cols() << " " << A.nonZeros() << "\n";
  char buf[64];
  for (int c = 0; c < A.outerSize(); ++c)
    for (SpMat::InnerIterator it(A, c); it; ++it) {
      std::snprintf(buf, sizeof buf, "%ld %ld %.17g\n", long(it.row() + 1), long(c + 1),
                    it.value());
      out << buf;
    }
}

inline void write_matrix_market(const Mat& A, const std::string& path) {
  write_matrix_market(SpMat(A.sparseView()), path);
}

/// Sparsity pattern as a "row col" pair list (1-based), for spy plots.
inline void write_sparsity(const SpMat& A, const std::string& path) {
  std::ofstream out(path);
  require(bool(out), "mmio", "cannot open '" + path + "' for writing");
  for (int c = 0; c < A.outerSize(); ++c)
    for (SpMat::InnerIterator it(A, c); it; ++it)
      out << it.row() + 1 << " " << c + 1 << "\n";
}

}  // namespace hsbp
