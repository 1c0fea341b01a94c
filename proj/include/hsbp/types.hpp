#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <stdexcept>
#include <string>

namespace hsbp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;
using Index = Eigen::Index;

/// Error carrying the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error("[" + module + "] " + what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

[[noreturn]] inline void fail(const std::string& module, const std::string& msg) {
  throw Error(module, msg);
}

inline void require(bool ok, const std::string& module, const std::string& msg) {
  if (!ok) fail(module, msg);
}

/// Flat index of grid node (ir, is) on an (n+1)x(n+1) grid; r varies fastest.
inline Index grid_index(Index ir, Index is, Index n) {
  if (ir < 0 || ir > n || is < 0 || is > n) fail("sbp2d", "grid index out of range");
  return is * (n + 1) + ir;
}

}  // namespace hsbp
