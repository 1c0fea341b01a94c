#pragma once

#include "hsbp/global_assembly.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include <memory>
#include <string>

namespace hsbp {

/// Sparse SPD factorization (LDL^T with fill-reducing AMD ordering).
class SpdFactorization {
 public:
  explicit SpdFactorization(const SpMat& A)
      : size_(A.rows()), ldlt_(std::make_unique<Eigen::SimplicialLDLT<SpMat>>()) {
    ldlt_->compute(A);
    require(ldlt_->info() == Eigen::Success, "solve", "sparse factorization failed");
    require(ldlt_->vectorD().minCoeff() > 0.0, "solve",
            "matrix not positive definite (penalty bound violated or assembly broken)");
  }
  Vec solve(const Vec& b) const { return ldlt_->solve(b); }
  Mat solve(const Mat& b) const { return ldlt_->solve(b); }
  Index size() const { return size_; }
  Index factor_nonzeros() const { return ldlt_->matrixL().nestedExpression().nonZeros(); }

 private:
  Index size_ = 0;
  std::unique_ptr<Eigen::SimplicialLDLT<SpMat>> ldlt_;
};

struct Solution {
  Vec u;       ///< volume values, blocks concatenated
  Vec lambda;  ///< trace values
  std::string path;
};

inline SpMat monolithic_matrix(const GlobalSystem& gs) {
  const Index nv = gs.Mbar.rows();
  const Index nt = gs.numbering.total;
  std::vector<Triplet> t;
  t.reserve(gs.Mbar.nonZeros() + 2 * gs.Fbar.nonZeros() + nt);
  for (int c = 0; c < gs.Mbar.outerSize(); ++c)
    for (SpMat::InnerIterator it(gs.Mbar, c); it; ++it)
      t.emplace_back(it.row(), c, it.value());
  for (int c = 0; c < gs.Fbar.outerSize(); ++c)
    for (SpMat::InnerIterator it(gs.Fbar, c); it; ++it) {
      t.emplace_back(it.row(), nv + c, it.value());
      t.emplace_back(nv + c, it.row(), it.value());
    }
  for (Index i = 0; i < nt; ++i) t.emplace_back(nv + i, nv + i, gs.Dbar[i]);
  SpMat K(nv + nt, nv + nt);
  K.setFromTriplets(t.begin(), t.end());
  return K;
}

inline Solution solve_monolithic(const GlobalSystem& gs) {
  const Index nv = gs.Mbar.rows();
  const Index nt = gs.numbering.total;
  SpdFactorization fac(monolithic_matrix(gs));
  Vec rhs(nv + nt);
  rhs << gs.gbar, gs.gdelta;
  Vec x = fac.solve(rhs);
  return {x.head(nv), x.tail(nt), "monolithic"};
}

/// Trace-variable reduction: (Dbar - Fbar^T Mbar^{-1} Fbar) lambda = gdelta - Fbar^T Mbar^{-1} gbar.
/// The Schur complement is formed explicitly via per-block solves.
inline Solution solve_trace_schur(const GlobalSystem& gs, int threads = 1) {
  const int nb = static_cast<int>(gs.mesh.blocks.size());
  const int m = gs.n + 1;
  const Index vsz = Index(m) * m;
  const Index nt = gs.numbering.total;

  Mat S = Mat::Zero(nt, nt);
  Vec rhs = gs.gdelta;
  Vec ubar = Vec::Zero(Index(nb) * vsz);
  std::vector<std::unique_ptr<SpdFactorization>> fac(nb);
  std::vector<std::vector<int>> touching(nb);  // interior faces per block
  for (std::size_t f = 0; f < gs.mesh.interior.size(); ++f) {
    touching[gs.mesh.interior[f].block_p].push_back(static_cast<int>(f));
    touching[gs.mesh.interior[f].block_m].push_back(static_cast<int>(f));
  }
  std::vector<Mat> Scontrib(nb);
  std::vector<Vec> rcontrib(nb, Vec::Zero(nt));
  detail::parallel_for(nb, threads, [&](int b) {
    fac[b] = std::make_unique<SpdFactorization>(gs.blocks[b].local.M);
    const auto& faces = touching[b];
    const Index nf = Index(faces.size()) * m;
    if (nf == 0) {
      Scontrib[b] = Mat::Zero(0, 0);
      return;
    }
    Mat Fb(vsz, nf);
    for (std::size_t j = 0; j < faces.size(); ++j) {
      const Index off = gs.numbering.offset[faces[j]];
      Fb.middleCols(Index(j) * m, m) =
          Mat(gs.Fbar.middleCols(off, m)).middleRows(gs.vol_offset(b), vsz);
    }
    Mat W = fac[b]->solve(Fb);
    Scontrib[b] = Fb.transpose() * W;
    Vec w = fac[b]->solve(Vec(gs.gbar.segment(gs.vol_offset(b), vsz)));
    Vec r = Fb.transpose() * w;
    for (std::size_t j = 0; j < faces.size(); ++j)
      rcontrib[b].segment(gs.numbering.offset[faces[j]], m) = r.segment(Index(j) * m, m);
  });
  for (int b = 0; b < nb; ++b) {
    const auto& faces = touching[b];
    for (std::size_t j = 0; j < faces.size(); ++j)
      for (std::size_t j2 = 0; j2 < faces.size(); ++j2)
        S.block(gs.numbering.offset[faces[j]], gs.numbering.offset[faces[j2]], m, m) -=
            Scontrib[b].block(Index(j) * m, Index(j2) * m, m, m);
    rhs -= rcontrib[b];
  }
  S.diagonal() += gs.Dbar;

  Vec lambda;
  if (nt > 0) {
    Eigen::LDLT<Mat> sf(S);
    require(sf.info() == Eigen::Success, "solve", "trace Schur factorization failed");
    lambda = sf.solve(rhs);
  } else {
    lambda = Vec::Zero(0);
  }
  detail::parallel_for(nb, threads, [&](int b) {
    Vec q = gs.gbar.segment(gs.vol_offset(b), vsz);
    if (!touching[b].empty())
      q -= Mat(gs.Fbar.middleRows(gs.vol_offset(b), vsz)) * lambda;
    ubar.segment(gs.vol_offset(b), vsz) = fac[b]->solve(q);
  });
  return {ubar, lambda, "trace"};
}

/// Volume reduction: (Mbar - Fbar Dbar^{-1} Fbar^T) u = gbar - Fbar Dbar^{-1} gdelta.
inline Solution solve_volume_schur(const GlobalSystem& gs) {
  Vec dinv = gs.Dbar.cwiseInverse();
  SpMat Fd = gs.Fbar * SpMat(dinv.asDiagonal());
  SpMat K = gs.Mbar - SpMat(Fd * gs.Fbar.transpose());
  SpdFactorization fac(K);
  Vec u = fac.solve(Vec(gs.gbar - Fd * gs.gdelta));
  Vec lambda = dinv.asDiagonal() * (gs.gdelta - gs.Fbar.transpose() * u);
  return {u, lambda, "volume"};
}

/// Smallest eigenvalue of a symmetric matrix (dense solve; desk scale).
inline double min_eigenvalue(const Mat& A) {
  require((A - A.transpose()).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff()),
          "solve", "min_eigenvalue requires a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (A + A.transpose()),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline double max_eigenvalue(const Mat& A) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (A + A.transpose()),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace hsbp
