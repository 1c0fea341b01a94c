#pragma once

#include "hsbp/global_assembly.hpp"
#include "hsbp/solve.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace hsbp {

/// Pseudo-random SPD coefficient field: at each node G^T G + 0.1 I with
/// G entries uniform in [-1, 1]; deterministic per seed.
inline Coefficients2D random_spd_coefficients(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Coefficients2D co;
  co.n = n;
  const Index sz = Index(n + 1) * (n + 1);
  co.crr.resize(sz);
  co.css.resize(sz);
  co.crs.resize(sz);
  for (Index k = 0; k < sz; ++k) {
    const double g11 = uni(rng), g12 = uni(rng), g21 = uni(rng), g22 = uni(rng);
    co.crr[k] = g11 * g11 + g21 * g21 + 0.1;
    co.css[k] = g12 * g12 + g22 * g22 + 0.1;
    co.crs[k] = g11 * g12 + g21 * g22;
  }
  return co;
}

// ---------------------------------------------------------------------------
// Manufactured solution on the disk-in-square domain: a solid-body piece on
// the unit disk and an annulus piece outside, discontinuous across r = 1 with
// continuous normal derivative.  b = I.
// ---------------------------------------------------------------------------
namespace mms {

inline constexpr int kDisk = 1;
inline constexpr int kOutside = 2;

inline double amplitude() {
  const double e = std::numbers::e;
  return e / (1.0 + 2.0 * e);
}

inline int region_point(double x, double y) {
  return (x * x + y * y <= 1.0) ? kDisk : kOutside;
}

inline double exact(double x, double y, int region) {
  const double K = amplitude();
  const double r2 = x * x + y * y;
  if (region == kDisk) return K * y * (2.0 - std::exp(-r2));
  const double r = std::sqrt(r2);
  return ((r - 1) * (r - 1) * x + (r - 1) * y) / r;
}

inline void exact_grad(double x, double y, int region, double& ux, double& uy) {
  const double K = amplitude();
  const double r2 = x * x + y * y;
  if (region == kDisk) {
    const double e = std::exp(-r2);
    ux = 2.0 * K * x * y * e;
    uy = K * (2.0 - e) + 2.0 * K * y * y * e;
    return;
  }
  const double r = std::sqrt(r2);
  const double A = (r - 1) * (r - 1) / r;
  const double B = (r - 1) / r;
  const double dA = (r2 - 1.0) / r2;  // dA/dr
  const double dB = 1.0 / r2;
  ux = A + x * x / r * dA + x * y / r * dB;
  uy = x * y / r * dA + B + y * y / r * dB;
}

inline double forcing(double x, double y, int region) {
  const double K = amplitude();
  const double r2 = x * x + y * y;
  if (region == kDisk) return -4.0 * K * y * (2.0 - r2) * std::exp(-r2);
  const double r = std::sqrt(r2);
  const double rm = r - 1;
  return -((2.0 + 2.0 * rm / r - rm * rm / r2) * x / r + y / (r2 * r));
}

/// [u] = u(plus) ... the mesh's plus side is the disk, so delta = u_out - u_in on r = 1.
inline double jump(double x, double y) {
  const double K = amplitude();
  return -K * (2.0 - std::exp(-1.0)) * y;
}

inline ProblemData problem() {
  ProblemData d;
  d.material = identity_material();
  d.region = [](double cx, double cy) { return region_point(cx, cy); };
  d.forcing = forcing;
  d.dirichlet = [](double x, double y, int region) { return exact(x, y, region); };
  d.neumann = [](double x, double y, double nx, double ny, int region) {
    double ux, uy;
    exact_grad(x, y, region, ux, uy);
    return nx * ux + ny * uy;
  };
  d.jump = jump;
  return d;
}

}  // namespace mms

/// error_N = sqrt( sum_b  d^T J (H(x)H) d ),  d = u_b - u_exact(x_b, y_b).
inline double volume_error(const GlobalSystem& gs, const Vec& ubar,
                           const std::function<double(double, double, int)>& exact) {
  double acc = 0.0;
  const Index vsz = Index(gs.n + 1) * (gs.n + 1);
  for (std::size_t b = 0; b < gs.blocks.size(); ++b) {
    const auto& bo = gs.blocks[b];
    Vec d(vsz);
    for (Index k = 0; k < vsz; ++k)
      d[k] = ubar[gs.vol_offset(int(b)) + k] - exact(bo.metrics.x[k], bo.metrics.y[k], bo.region);
    acc += d.dot((bo.local.HHJ.array() * d.array()).matrix());
  }
  return std::sqrt(acc);
}

/// interface error  sqrt( sum_{interior f}  d^T S_J H d ),
/// d = sigma(plus side) - S_J * (n_plus . grad u_exact).
inline double interface_error(const GlobalSystem& gs,
                              const std::vector<std::array<Vec, 4>>& sigma,
                              const std::function<void(double, double, int, double&, double&)>&
                                  exact_grad) {
  double acc = 0.0;
  for (const auto& fc : gs.mesh.interior) {
    const auto& bo = gs.blocks[fc.block_p];
    const int k = fc.face_p - 1;
    const Vec& sj = bo.local.SJ[k];
    const Vec& hf = bo.local.Hface[k];
    const Vec& s = sigma[fc.block_p][k];
    for (Index i = 0; i < s.size(); ++i) {
      double ux, uy;
      exact_grad(bo.surf.fx[k][i], bo.surf.fy[k][i], bo.region, ux, uy);
      const double d = s[i] - sj[i] * (bo.surf.nx[k][i] * ux + bo.surf.ny[k][i] * uy);
      acc += d * sj[i] * hf[i] * d;
    }
  }
  return std::sqrt(acc);
}

/// Minimum/maximum eigenvalue of a single-block local matrix for a sweep of
/// penalty scalings (single block, all faces Dirichlet, random coefficients).
struct TauSweepRow {
  double tau_scale;
  double lambda_min;
  double lambda_max;
};

inline std::vector<TauSweepRow> tau_sweep(int p, int n, std::uint64_t seed,
                                          const std::vector<double>& scales) {
  SbpOperators1D ops = build_first_derivative(p, n);
  BorrowingConstants bc = borrowing_constants(p, ops);
  Coefficients2D co = random_spd_coefficients(seed, n);
  StiffnessBundle sb = build_stiffness(ops, co);
  std::array<FaceOperators, 4> faces;
  for (int k = 1; k <= 4; ++k)
    faces[k - 1] = build_face_operators(k, ops, co, Vec::Ones(n + 1));
  MetricTerms mt = evaluate_metrics(
      BlockMapping::analytic([](double r, double s, double& x, double& y, double& xr,
                                double& xs, double& yr, double& ys) {
        x = r; y = s; xr = 1; xs = 0; yr = 0; ys = 1;
      }),
      n);
  std::vector<TauSweepRow> rows;
  for (double ts : scales) {
    PenaltyParameters pp = penalty_parameters(co, bc, ops.h, ts);
    LocalProblem lp = assemble_local(ops, sb, faces, pp, mt,
                                     {FaceRole::Dirichlet, FaceRole::Dirichlet,
                                      FaceRole::Dirichlet, FaceRole::Dirichlet});
    Mat M(lp.M);
    rows.push_back({ts, min_eigenvalue(M), max_eigenvalue(M)});
  }
  return rows;
}

}  // namespace hsbp
