#pragma once

#include "hsbp/local_problem.hpp"
#include "hsbp/mesh.hpp"

#include <functional>
#include <thread>
#include <vector>

namespace hsbp {

/// Problem data: material tensor, source, boundary and interface values.
/// Data callbacks receive a region id (assigned per block from its centroid)
/// so piecewise-defined exact solutions evaluate the correct branch on
/// interface nodes shared by two blocks.
struct ProblemData {
  MaterialFn material = identity_material();
  std::function<int(double, double)> region = [](double, double) { return 0; };
  std::function<double(double, double, int)> forcing = [](double, double, int) { return 0.0; };
  std::function<double(double, double, int)> dirichlet =
      [](double, double, int) { return 0.0; };
  /// g_N(x, y, nx, ny, region) with (nx, ny) the physical outward unit normal
  std::function<double(double, double, double, double, int)> neumann =
      [](double, double, double, double, int) { return 0.0; };
  /// prescribed jump [u] data on jump faces (plus-side ordering)
  std::function<double(double, double)> jump = [](double, double) { return 0.0; };
  /// optional per-block coefficient injection (randomized positivity suites);
  /// overrides the metric transform of `material` when set
  std::function<Coefficients2D(int block, const MetricTerms&)> coefficient_override;
};

/// Everything assembled for one block.
struct BlockOperators {
  BlockMapping map = BlockMapping::analytic({});
  MetricTerms metrics;
  SurfaceGeometry surf;
  Coefficients2D coeffs;
  std::array<FaceOperators, 4> faces;
  LocalProblem local;
  std::array<int, 4> iface_id{-1, -1, -1, -1};  // interior face index per face
  std::array<bool, 4> iface_plus{};             // this block is the plus side
  std::array<bool, 4> iface_rev{};              // orientation of the minus side
  std::array<Vec, 4> face_data;                 // g_D, g_N, or local-ordered delta
  int region = 0;
};

/// Monolithic data of Eq.-(4)-type:  [[Mbar, Fbar],[Fbar^T, diag(Dbar)]].
struct GlobalSystem {
  Mesh mesh;
  int p = 0, n = 0;
  double tau_scale = 1.0;
  TraceNumbering numbering;
  std::vector<BlockOperators> blocks;
  SpMat Mbar;
  SpMat Fbar;
  Vec Dbar;
  Vec gbar;
  Vec gdelta;
  Index vol_offset(int b) const { return Index(b) * (n + 1) * (n + 1); }
};

namespace detail {

inline void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (int i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

inline GlobalSystem assemble_global(const Mesh& mesh, int p, int n, const ProblemData& data,
                                    double tau_scale = 1.0, int threads = 1) {
  GlobalSystem gs;
  gs.mesh = mesh;
  gs.p = p;
  gs.n = n;
  gs.tau_scale = tau_scale;
  gs.numbering = build_trace_numbering(mesh, n);
  const int nb = static_cast<int>(mesh.blocks.size());
  const int m = n + 1;
  const Index vsz = Index(m) * m;

  // face roles per block
  std::vector<std::array<FaceRole, 4>> roles(nb, {FaceRole::Interior, FaceRole::Interior,
                                                  FaceRole::Interior, FaceRole::Interior});
  for (const auto& bf : mesh.boundary)
    roles[bf.block][bf.face - 1] =
        (bf.bc == BcType::Dirichlet) ? FaceRole::Dirichlet : FaceRole::Neumann;

  gs.blocks.resize(nb);
  const SbpOperators1D ops = build_first_derivative(p, n);
  const BorrowingConstants bc = borrowing_constants(p, ops);

  detail::parallel_for(nb, threads, [&](int b) {
    BlockOperators& bo = gs.blocks[b];
    bo.map = mesh.blocks[b].mapping();
    bo.metrics = evaluate_metrics(bo.map, n);
    bo.surf = surface_geometry(bo.map, n);
    if (data.coefficient_override) {
      bo.coeffs = data.coefficient_override(b, bo.metrics);
      validate_coefficients(bo.coeffs);
    } else {
      bo.coeffs = transform_coefficients(bo.metrics, data.material);
    }
    bo.region = data.region(bo.metrics.x.mean(), bo.metrics.y.mean());
    for (int k = 1; k <= 4; ++k)
      bo.faces[k - 1] = build_face_operators(k, ops, bo.coeffs, bo.surf.SJ[k - 1]);
    PenaltyParameters pp = penalty_parameters(bo.coeffs, bc, ops.h, tau_scale);
    bo.local = assemble_local(ops, build_stiffness(ops, bo.coeffs), bo.faces, pp,
                              bo.metrics, roles[b]);
  });

  // wire interior faces
  for (std::size_t f = 0; f < mesh.interior.size(); ++f) {
    const auto& fc = mesh.interior[f];
    auto& bp = gs.blocks[fc.block_p];
    auto& bm = gs.blocks[fc.block_m];
    bp.iface_id[fc.face_p - 1] = static_cast<int>(f);
    bp.iface_plus[fc.face_p - 1] = true;
    bp.iface_rev[fc.face_p - 1] = false;
    bm.iface_id[fc.face_m - 1] = static_cast<int>(f);
    bm.iface_plus[fc.face_m - 1] = false;
    bm.iface_rev[fc.face_m - 1] = fc.reversed;
  }

  // volume RHS and boundary face data
  gs.gbar = Vec::Zero(Index(nb) * vsz);
  for (int b = 0; b < nb; ++b) {
    auto& bo = gs.blocks[b];
    Vec fvol(vsz);
    for (Index k = 0; k < vsz; ++k)
      fvol[k] = data.forcing(bo.metrics.x[k], bo.metrics.y[k], bo.region);
    std::array<const Vec*, 4> fd{nullptr, nullptr, nullptr, nullptr};
    for (int k = 0; k < 4; ++k) {
      const auto role = bo.local.role[k];
      if (role == FaceRole::Dirichlet) {
        Vec g(m);
        for (Index i = 0; i < m; ++i)
          g[i] = data.dirichlet(bo.surf.fx[k][i], bo.surf.fy[k][i], bo.region);
        bo.face_data[k] = g;
        fd[k] = &bo.face_data[k];
      } else if (role == FaceRole::Neumann) {
        Vec g(m);
        for (Index i = 0; i < m; ++i)
          g[i] = data.neumann(bo.surf.fx[k][i], bo.surf.fy[k][i], bo.surf.nx[k][i],
                              bo.surf.ny[k][i], bo.region);
        bo.face_data[k] = g;
        fd[k] = &bo.face_data[k];
      }
    }
    gs.gbar.segment(gs.vol_offset(b), vsz) = local_rhs(bo.local, fvol, fd);
  }

  // trace system: D_f = H(tau+ + tau-),  rhs = H(tau+ - tau-) delta / 2,
  // with the minus side composed with the orientation map.
  gs.Dbar = Vec::Zero(gs.numbering.total);
  gs.gdelta = Vec::Zero(gs.numbering.total);
  std::vector<Triplet> tf;
  for (std::size_t f = 0; f < mesh.interior.size(); ++f) {
    const auto& fc = mesh.interior[f];
    auto& bp = gs.blocks[fc.block_p];
    auto& bm = gs.blocks[fc.block_m];
    const int kp = fc.face_p - 1, km = fc.face_m - 1;
    const Index off = gs.numbering.offset[f];
    auto pm = [&](Index t) { return fc.reversed ? Index(n) - t : t; };

    Vec delta = Vec::Zero(m);
    if (fc.jump) {
      for (Index i = 0; i < m; ++i)
        delta[i] = data.jump(bp.surf.fx[kp][i], bp.surf.fy[kp][i]);
    }
    // local face data used for flux recovery: lambda_k = P lambda -/+ delta/2
    bp.face_data[kp] = -0.5 * delta;                                 // minus delta/2
    bm.face_data[km] = 0.5 * orient_face_vector(delta, fc.reversed);  // plus delta/2

    const Vec& Hp = bp.local.Hface[kp];
    const Vec& taup = bp.local.tau[kp];
    const Vec& Hm = bm.local.Hface[km];
    const Vec& taum = bm.local.tau[km];
    for (Index t = 0; t < m; ++t) {
      const double dp = Hp[t] * taup[t];
      const double dm = Hm[pm(t)] * taum[pm(t)];
      gs.Dbar[off + t] = dp + dm;
      gs.gdelta[off + t] = 0.5 * (dp - dm) * delta[t];
    }
    // volume RHS jump contributions: q -= F_k lambda_k with lambda = -/+ delta/2
    if (fc.jump) {
      gs.gbar.segment(gs.vol_offset(fc.block_p), vsz) += 0.5 * (bp.local.F[kp] * delta);
      Vec dm = orient_face_vector(delta, fc.reversed);
      gs.gbar.segment(gs.vol_offset(fc.block_m), vsz) -= 0.5 * (bm.local.F[km] * dm);
    }
    // Fbar blocks
    for (int side = 0; side < 2; ++side) {
      const auto& bo = (side == 0) ? bp : bm;
      const int k = (side == 0) ? kp : km;
      const Index voff = gs.vol_offset(side == 0 ? fc.block_p : fc.block_m);
      const SpMat& Fk = bo.local.F[k];
      for (int col = 0; col < Fk.outerSize(); ++col)
        for (SpMat::InnerIterator it(Fk, col); it; ++it) {
          const Index t = (side == 0) ? Index(col) : (fc.reversed ? Index(n) - col : Index(col));
          tf.emplace_back(voff + it.row(), off + t, it.value());
        }
    }
  }
  gs.Fbar.resize(Index(nb) * vsz, gs.numbering.total);
  gs.Fbar.setFromTriplets(tf.begin(), tf.end());

  // block-diagonal Mbar
  std::vector<Triplet> tm;
  for (int b = 0; b < nb; ++b) {
    const Index voff = gs.vol_offset(b);
    const SpMat& M = gs.blocks[b].local.M;
    for (int col = 0; col < M.outerSize(); ++col)
      for (SpMat::InnerIterator it(M, col); it; ++it)
        tm.emplace_back(voff + it.row(), voff + col, it.value());
  }
  gs.Mbar.resize(Index(nb) * vsz, Index(nb) * vsz);
  gs.Mbar.setFromTriplets(tm.begin(), tm.end());
  return gs;
}

/// Penalty fluxes  sigma_k = H^{-1} G_k u - tau (L_k u - lambda_k)  per face.
/// On interior faces lambda_k is the trace value with the half-jump applied;
/// on Dirichlet faces it is g_D; on Neumann faces the eliminated expression.
inline std::vector<std::array<Vec, 4>> flux_recovery(const GlobalSystem& gs, const Vec& ubar,
                                                     const Vec& lambda) {
  const int nb = static_cast<int>(gs.mesh.blocks.size());
  const int m = gs.n + 1;
  const Index vsz = Index(m) * m;
  std::vector<std::array<Vec, 4>> out(nb);
  for (int b = 0; b < nb; ++b) {
    const auto& bo = gs.blocks[b];
    Vec u = ubar.segment(gs.vol_offset(b), vsz);
    for (int k = 0; k < 4; ++k) {
      const auto& f = bo.faces[k];
      Vec Gu = f.G * u;
      Vec Lu = f.L * u;
      Vec lam;
      if (bo.local.role[k] == FaceRole::Interior) {
        const Index off = gs.numbering.offset[bo.iface_id[k]];
        Vec lam_face = lambda.segment(off, m);
        if (!bo.iface_plus[k]) lam_face = orient_face_vector(lam_face, bo.iface_rev[k]);
        lam = lam_face + bo.face_data[k];  // -/+ delta/2 stored at assembly
      } else if (bo.local.role[k] == FaceRole::Dirichlet) {
        lam = bo.face_data[k];
      } else {
        // lambda = L u + tau^{-1} (S_J g_N - H^{-1} G u)
        lam = Lu + ((bo.local.SJ[k].array() * bo.face_data[k].array() -
                     Gu.array() / bo.local.Hface[k].array()) /
                    bo.local.tau[k].array())
                       .matrix();
      }
      out[b][k] = (Gu.array() / bo.local.Hface[k].array() -
                   bo.local.tau[k].array() * (Lu - lam).array())
                      .matrix();
    }
  }
  return out;
}

}  // namespace hsbp
