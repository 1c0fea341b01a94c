#pragma once

#include "hsbp/geometry.hpp"
#include "hsbp/sbp2d.hpp"
#include "hsbp/types.hpp"

#include <array>

namespace hsbp {

enum class FaceRole { Dirichlet, Neumann, Interior };

/// Diagonal penalty parameters per face, scaled equality version of the
/// positivity bound:
///   tau_1^j = ts * [ 2 C_rr(0,j)^2 / (h beta Psi(0,j)) + 2 C_rs(0,j)^2 / (h alpha Psi(0,j)) ]
/// where Psi is the windowed minimum of psi_min over the first l nodes.
struct PenaltyParameters {
  std::array<Vec, 4> tau;  // units 1/length
  double tau_scale = 1.0;
};

inline PenaltyParameters penalty_parameters(const Coefficients2D& co,
                                            const BorrowingConstants& bc, double h,
                                            double tau_scale = 1.0) {
  require(tau_scale >= 1.0, "local_problem", "tau_scale must be >= 1");
  const int n = co.n;
  Vec psi = psi_min_field(co);
  PenaltyParameters pp;
  pp.tau_scale = tau_scale;
  const int l = std::min(bc.l, n);
  auto window_min = [&](int face, Index t) {
    double m = std::numeric_limits<double>::max();
    for (int k = 0; k <= l; ++k) {
      Index idx;
      switch (face) {
        case 1: idx = grid_index(k, t, n); break;
        case 2: idx = grid_index(n - k, t, n); break;
        case 3: idx = grid_index(t, k, n); break;
        default: idx = grid_index(t, n - k, n); break;
      }
      m = std::min(m, psi[idx]);
    }
    return m;
  };
  for (int face = 1; face <= 4; ++face) {
    Vec tau(n + 1);
    for (Index t = 0; t <= n; ++t) {
      Index edge;
      switch (face) {
        case 1: edge = grid_index(0, t, n); break;
        case 2: edge = grid_index(n, t, n); break;
        case 3: edge = grid_index(t, 0, n); break;
        default: edge = grid_index(t, n, n); break;
      }
      const double psi_w = window_min(face, t);
      const double cn = (face <= 2) ? co.crr[edge] : co.css[edge];
      const double ct = co.crs[edge];
      tau[t] = tau_scale * (2.0 * cn * cn / (h * bc.beta * psi_w) +
                            2.0 * ct * ct / (h * bc.alpha * psi_w));
    }
    pp.tau[face - 1] = tau;
  }
  return pp;
}

/// Per-block system  M u = q  with face matrices F_k = G_k^T - L_k^T H tau_k.
struct LocalProblem {
  int n = 0;
  double h = 0;
  SpMat M;                       // symmetric; SPD under the penalty bound
  std::array<SpMat, 4> F;        // volume x face couplings
  std::array<FaceRole, 4> role{};
  std::array<Vec, 4> tau;
  std::array<Vec, 4> Hface;      // face quadrature (length units)
  std::array<Vec, 4> SJ;         // surface Jacobians per face
  Vec HHJ;                       // diagonal of (H (x) H) * J  (area units)
};

inline LocalProblem assemble_local(const SbpOperators1D& ops, const StiffnessBundle& sb,
                                   const std::array<FaceOperators, 4>& faces,
                                   const PenaltyParameters& pp, const MetricTerms& mt,
                                   const std::array<FaceRole, 4>& role) {
  const int n = ops.n;
  const Index sz = Index(n + 1) * (n + 1);
  LocalProblem lp;
  lp.n = n;
  lp.h = ops.h;
  lp.role = role;
  lp.M = sb.total;
  Vec Ht = ops.H / ops.h;
  {
    Vec hh(sz);
    for (Index is = 0; is <= n; ++is)
      for (Index ir = 0; ir <= n; ++ir)
        hh[grid_index(ir, is, n)] = ops.H[ir] * ops.H[is];
    lp.HHJ = hh.array() * mt.J.array();
  }
  for (int k = 0; k < 4; ++k) {
    const auto& f = faces[k];
    lp.tau[k] = pp.tau[k];
    lp.Hface[k] = f.Hface;
    lp.SJ[k] = f.surface_jacobian;
    Vec htau = f.Hface.array() * pp.tau[k].array();  // dimensionless
    SpMat LtG = f.L.transpose() * f.G;
    SpMat LtHtL = f.L.transpose() * SpMat(htau.asDiagonal() * f.L);
    lp.M += SpMat(LtHtL - LtG - SpMat(LtG.transpose()));
    lp.F[k] = SpMat(f.G.transpose()) - SpMat(f.L.transpose() * SpMat(htau.asDiagonal()));
    if (role[k] == FaceRole::Neumann) {
      Vec inv_htau = htau.cwiseInverse();
      lp.M -= SpMat(lp.F[k] * SpMat(inv_htau.asDiagonal() * SpMat(lp.F[k].transpose())));
    }
  }
  SpMat msym = lp.M.selfadjointView<Eigen::Upper>();  // assembly mirrors symmetric terms
  lp.M = std::move(msym);
  lp.M.makeCompressed();
  return lp;
}

/// Boundary data sampled along one face.
struct FaceData {
  Vec values;  // g_D on Dirichlet faces, g_N on Neumann faces
};

/// Local right-hand side q = (H(x)H) J f - sum_k F_k lambda_k for the faces
/// whose data is known locally (Dirichlet/Neumann).  Interior-face coupling and
/// jump data are added by the global assembly.
inline Vec local_rhs(const LocalProblem& lp, const Vec& f_volume,
                     const std::array<const Vec*, 4>& face_data) {
  Vec q = lp.HHJ.array() * f_volume.array();
  for (int k = 0; k < 4; ++k) {
    if (lp.role[k] == FaceRole::Dirichlet) {
      require(face_data[k] != nullptr, "local_problem", "missing Dirichlet data");
      q -= lp.F[k] * (*face_data[k]);
    } else if (lp.role[k] == FaceRole::Neumann) {
      require(face_data[k] != nullptr, "local_problem", "missing Neumann data");
      // eliminated-trace contribution: -F_k tau^{-1} S_J g_N
      Vec t = (lp.SJ[k].array() * face_data[k]->array()) / lp.tau[k].array();
      q -= lp.F[k] * t;
    }
  }
  return q;
}

}  // namespace hsbp
