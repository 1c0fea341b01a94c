#pragma once

#include "hsbp/sbp1d.hpp"
#include "hsbp/types.hpp"

#include <array>
#include <cmath>

namespace hsbp {

/// Transformed coefficient fields on the (n+1)^2 reference grid, r fastest.
struct Coefficients2D {
  int n = 0;
  Vec crr, css, crs;  // c_sr == c_rs
};

/// Pointwise smaller eigenvalue of [crr crs; crs css].
inline Vec psi_min_field(const Coefficients2D& c) {
  const auto& a = c.crr.array();
  const auto& b = c.css.array();
  const auto& d = c.crs.array();
  Vec psi = 0.5 * (a + b - ((a - b).square() + 4.0 * d.square()).sqrt());
  require(psi.minCoeff() > 0.0, "sbp2d", "coefficient matrix not positive definite (psi_min <= 0)");
  return psi;
}

inline void validate_coefficients(const Coefficients2D& c) {
  const Index m = (c.n + 1) * (c.n + 1);
  require(c.crr.size() == m && c.css.size() == m && c.crs.size() == m, "sbp2d",
          "coefficient field size mismatch");
  require(c.crr.minCoeff() > 0 && c.css.minCoeff() > 0, "sbp2d",
          "c_rr and c_ss must be positive");
  require((c.crr.array() * c.css.array() - c.crs.array().square()).minCoeff() > 0, "sbp2d",
          "c_rr*c_ss - c_rs^2 must be positive");
}

/// Face extraction L_k and weighted boundary derivative G_k for one face,
/// plus the face quadrature (physical, includes h) and surface Jacobians.
struct FaceOperators {
  int face = 0;    // 1: r=0, 2: r=1, 3: s=0, 4: s=1
  SpMat L;         // (n+1) x (n+1)^2 selection
  SpMat G;         // (n+1) x (n+1)^2, dimensionless
  Vec surface_jacobian;
  Vec Hface;       // 1D norm diagonal along the face (length units)
};

inline FaceOperators build_face_operators(int face, const SbpOperators1D& ops,
                                          const Coefficients2D& co, const Vec& surf_jac) {
  require(face >= 1 && face <= 4, "sbp2d", "face index must be 1..4");
  const int n = ops.n;
  const int m = n + 1;
  require(co.n == n, "sbp2d", "grid size mismatch");
  require(surf_jac.size() == m, "sbp2d", "surface Jacobian length mismatch");

  FaceOperators f;
  f.face = face;
  f.surface_jacobian = surf_jac;
  f.Hface = ops.H;
  Vec Ht = ops.H / ops.h;        // dimensionless norm
  Vec d0t = ops.d0 * ops.h;
  Vec dnt = ops.dn * ops.h;

  std::vector<Triplet> tl, tg;
  tl.reserve(m);
  tg.reserve(2 * m * m);
  auto crr_at = [&](Index ir, Index is) { return co.crr[grid_index(ir, is, n)]; };
  auto css_at = [&](Index ir, Index is) { return co.css[grid_index(ir, is, n)]; };
  auto crs_at = [&](Index ir, Index is) { return co.crs[grid_index(ir, is, n)]; };

  if (face == 1 || face == 2) {
    const Index ir0 = (face == 1) ? 0 : n;
    const Vec& drow = (face == 1) ? d0t : dnt;
    const double sign = (face == 1) ? -1.0 : 1.0;
    for (Index is = 0; is <= n; ++is) {
      tl.emplace_back(is, grid_index(ir0, is, n), 1.0);
      // sign * (H C_rr ⊗ d^T): row is, cols (ir, is)
      for (Index ir = 0; ir <= n; ++ir) {
        if (drow[ir] != 0.0)
          tg.emplace_back(is, grid_index(ir, is, n), sign * Ht[is] * crr_at(ir0, is) * drow[ir]);
      }
      // sign * (C_rs Q ⊗ e^T): row is, cols (ir0, js)
      for (Index js = 0; js <= n; ++js) {
        const double q = ops.Q(is, js);
        if (q != 0.0) tg.emplace_back(is, grid_index(ir0, js, n), sign * crs_at(ir0, is) * q);
      }
    }
  } else {
    const Index is0 = (face == 3) ? 0 : n;
    const Vec& drow = (face == 3) ? d0t : dnt;
    const double sign = (face == 3) ? -1.0 : 1.0;
    for (Index ir = 0; ir <= n; ++ir) {
      tl.emplace_back(ir, grid_index(ir, is0, n), 1.0);
      for (Index is = 0; is <= n; ++is) {
        if (drow[is] != 0.0)
          tg.emplace_back(ir, grid_index(ir, is, n), sign * Ht[ir] * css_at(ir, is0) * drow[is]);
      }
      for (Index jr = 0; jr <= n; ++jr) {
        const double q = ops.Q(ir, jr);
        if (q != 0.0) tg.emplace_back(ir, grid_index(jr, is0, n), sign * crs_at(ir, is0) * q);
      }
    }
  }
  f.L.resize(m, m * m);
  f.L.setFromTriplets(tl.begin(), tl.end());
  f.G.resize(m, m * m);
  f.G.setFromTriplets(tg.begin(), tg.end());
  return f;
}

/// The four A matrices of the volume stiffness (all dimensionless).
struct StiffnessBundle {
  SpMat Arr, Ass, Ars, Asr;
  SpMat total;
};

inline StiffnessBundle build_stiffness(const SbpOperators1D& ops, const Coefficients2D& co) {
  validate_coefficients(co);
  const int n = ops.n;
  const int m = n + 1;
  require(co.n == n, "sbp2d", "grid size mismatch");
  const Index sz = Index(m) * m;
  Vec Ht = ops.H / ops.h;

  std::vector<Triplet> trr, tss, trs, tsr;
  // A_rr: per s-line j, block H~_j * A~(c_rr line)
  for (Index js = 0; js <= n; ++js) {
    Vec cline(m);
    for (Index ir = 0; ir <= n; ++ir) cline[ir] = co.crr[grid_index(ir, js, n)];
    Mat Aline = stiffness_matrix(ops, cline) * ops.h;  // dimensionless
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) {
        const double v = Ht[js] * Aline(a, b);
        if (v != 0.0) trr.emplace_back(grid_index(a, js, n), grid_index(b, js, n), v);
      }
  }
  // A_ss: per r-line i, block H~_i * A~(c_ss line) acting on s
  for (Index ir = 0; ir <= n; ++ir) {
    Vec cline(m);
    for (Index is = 0; is <= n; ++is) cline[is] = co.css[grid_index(ir, is, n)];
    Mat Aline = stiffness_matrix(ops, cline) * ops.h;
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) {
        const double v = Ht[ir] * Aline(a, b);
        if (v != 0.0) tss.emplace_back(grid_index(ir, a, n), grid_index(ir, b, n), v);
      }
  }
  // A_rs = (I ⊗ Q^T) C_rs (Q ⊗ I):
  //   entry ((as,ar),(bs,br)) = Q(br,ar) c_rs(br,as) Q(as,bs)
  // A_sr = (Q^T ⊗ I) C_sr (I ⊗ Q):
  //   entry ((as,ar),(bs,br)) = Q(bs,as) c_rs(ar,bs) Q(ar,br)
  std::vector<std::vector<std::pair<Index, double>>> qcols(m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c)
      if (ops.Q(r, c) != 0.0) qcols[c].emplace_back(r, ops.Q(r, c));
  for (Index ar = 0; ar < m; ++ar)
    for (auto [br, qra] : qcols[ar])           // Q(br, ar)
      for (Index as = 0; as < m; ++as) {
        const double cv = co.crs[grid_index(br, as, n)];
        for (Index bs = 0; bs < m; ++bs) {
          const double q2 = ops.Q(as, bs);
          if (q2 != 0.0)
            trs.emplace_back(grid_index(ar, as, n), grid_index(br, bs, n), qra * cv * q2);
        }
      }
  // A_sr = A_rs^T exactly (c_sr = c_rs); reuse the same triplet values transposed
  tsr.reserve(trs.size());
  for (const auto& t : trs) tsr.emplace_back(t.col(), t.row(), t.value());

  StiffnessBundle sb;
  sb.Arr.resize(sz, sz); sb.Arr.setFromTriplets(trr.begin(), trr.end());
  sb.Ass.resize(sz, sz); sb.Ass.setFromTriplets(tss.begin(), tss.end());
  sb.Ars.resize(sz, sz); sb.Ars.setFromTriplets(trs.begin(), trs.end());
  sb.Asr.resize(sz, sz); sb.Asr.setFromTriplets(tsr.begin(), tsr.end());
  sb.total = sb.Arr + sb.Ass + sb.Ars + sb.Asr;
  SpMat sym = sb.total.selfadjointView<Eigen::Upper>();  // mirror to exact symmetry
  sb.total = std::move(sym);
  return sb;
}

/// Max-abs deviation of the volume/surface split
///   (H⊗H)(-D_rr - D_rs - D_sr - D_ss) = A_total - sum_k L_k^T G_k.
inline double verify_split_identity(const SbpOperators1D& ops, const Coefficients2D& co,
                                    const StiffnessBundle& sb,
                                    const std::array<FaceOperators, 4>& faces) {
  const int n = ops.n;
  const int m = n + 1;
  const Index sz = Index(m) * m;
  Vec Ht = ops.H / ops.h;
  Vec d0t = ops.d0 * ops.h, dnt = ops.dn * ops.h;

  // left side assembled from the derivative-operator decompositions
  std::vector<Triplet> tl;
  auto at = [&](const Vec& f, Index ir, Index is) { return f[grid_index(ir, is, n)]; };
  for (Index js = 0; js <= n; ++js) {
    Vec cline(m);
    for (Index ir = 0; ir <= n; ++ir) cline[ir] = at(co.crr, ir, js);
    Mat Aline = stiffness_matrix(ops, cline) * ops.h;
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) {
        double v = Ht[js] * Aline(a, b);
        // boundary pieces of -(H⊗H) D_rr
        if (a == m - 1) v -= Ht[js] * cline[m - 1] * dnt[b];
        if (a == 0) v += Ht[js] * cline[0] * d0t[b];
        if (v != 0.0) tl.emplace_back(grid_index(a, js, n), grid_index(b, js, n), v);
      }
  }
  for (Index ir = 0; ir <= n; ++ir) {
    Vec cline(m);
    for (Index is = 0; is <= n; ++is) cline[is] = at(co.css, ir, is);
    Mat Aline = stiffness_matrix(ops, cline) * ops.h;
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) {
        double v = Ht[ir] * Aline(a, b);
        if (a == m - 1) v -= Ht[ir] * cline[m - 1] * dnt[b];
        if (a == 0) v += Ht[ir] * cline[0] * d0t[b];
        if (v != 0.0) tl.emplace_back(grid_index(ir, a, n), grid_index(ir, b, n), v);
      }
  }
  SpMat lhs(sz, sz);
  lhs.setFromTriplets(tl.begin(), tl.end());
  // -(H⊗H)(D_rs + D_sr) = A_rs + A_sr - boundary pieces
  SpMat cross = sb.Ars + sb.Asr;
  std::vector<Triplet> tb;
  for (Index is = 0; is <= n; ++is) {
    for (Index js = 0; js <= n; ++js) {
      const double q = ops.Q(is, js);
      if (q == 0.0) continue;
      tb.emplace_back(grid_index(m - 1, is, n), grid_index(m - 1, js, n),
                      -at(co.crs, m - 1, is) * q);
      tb.emplace_back(grid_index(0, is, n), grid_index(0, js, n), at(co.crs, 0, is) * q);
      tb.emplace_back(grid_index(is, m - 1, n), grid_index(js, m - 1, n),
                      -at(co.crs, is, m - 1) * q);
      tb.emplace_back(grid_index(is, 0, n), grid_index(js, 0, n), at(co.crs, is, 0) * q);
    }
  }
  SpMat bnd(sz, sz);
  bnd.setFromTriplets(tb.begin(), tb.end());
  lhs += cross + bnd;

  SpMat rhs = sb.total;
  for (const auto& f : faces) rhs -= SpMat(f.L.transpose() * f.G);
  return SpMat(lhs - rhs).coeffs().size() ? SpMat(lhs - rhs).coeffs().cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace hsbp
