#pragma once

#include "hsbp/sbp2d.hpp"
#include "hsbp/types.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace hsbp {

/// Parametric edge curve on t in [0,1]: straight segment or circular arc.
struct Curve {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  double cx = 0, cy = 0, radius = 0, th0 = 0, th1 = 0;

  static Curve line(double ax, double ay, double bx, double by) {
    Curve c;
    c.kind = Kind::Line;
    c.x0 = ax; c.y0 = ay; c.x1 = bx; c.y1 = by;
    return c;
  }

  /// Arc from (ax,ay) to (bx,by) around (ccx,ccy); takes the short way.
  static Curve arc(double ax, double ay, double bx, double by, double ccx, double ccy,
                   double r) {
    Curve c;
    c.kind = Kind::Arc;
    c.x0 = ax; c.y0 = ay; c.x1 = bx; c.y1 = by;
    c.cx = ccx; c.cy = ccy; c.radius = r;
    const double ra = std::hypot(ax - ccx, ay - ccy);
    const double rb = std::hypot(bx - ccx, by - ccy);
    require(std::abs(ra - r) < 1e-9 * std::max(1.0, r) && std::abs(rb - r) < 1e-9 * std::max(1.0, r),
            "geometry", "arc endpoints not on the circle");
    c.th0 = std::atan2(ay - ccy, ax - ccx);
    c.th1 = std::atan2(by - ccy, bx - ccx);
    while (c.th1 - c.th0 > std::numbers::pi) c.th1 -= 2 * std::numbers::pi;
    while (c.th1 - c.th0 < -std::numbers::pi) c.th1 += 2 * std::numbers::pi;
    return c;
  }

  void eval(double t, double& x, double& y) const {
    if (kind == Kind::Line) {
      x = x0 + t * (x1 - x0);
      y = y0 + t * (y1 - y0);
    } else {
      const double th = th0 + t * (th1 - th0);
      x = cx + radius * std::cos(th);
      y = cy + radius * std::sin(th);
    }
  }
  void deriv(double t, double& dx, double& dy) const {
    if (kind == Kind::Line) {
      dx = x1 - x0;
      dy = y1 - y0;
    } else {
      const double th = th0 + t * (th1 - th0);
      const double dth = th1 - th0;
      dx = -radius * std::sin(th) * dth;
      dy = radius * std::cos(th) * dth;
    }
  }
};

/// Mapping (r,s) in [0,1]^2 -> physical (x,y) with analytic partials.
class BlockMapping {
 public:
  using AnalyticFn =
      std::function<void(double r, double s, double& x, double& y, double& xr, double& xs,
                         double& yr, double& ys)>;

  static BlockMapping analytic(AnalyticFn fn) {
    BlockMapping m;
    m.fn_ = std::move(fn);
    return m;
  }

  /// Coons patch from edges: faces 1 (r=0), 2 (r=1), 3 (s=0), 4 (s=1);
  /// face 1/2 curves run in s, face 3/4 curves run in r.
  static BlockMapping transfinite(const std::array<Curve, 4>& edges) {
    BlockMapping m;
    m.edges_ = edges;
    m.coons_ = true;
    const auto& W = edges[0];
    const auto& E = edges[1];
    const auto& S = edges[2];
    const auto& N = edges[3];
    auto near = [](double ax, double ay, double bx, double by) {
      return std::hypot(ax - bx, ay - by) < 1e-12 * std::max({1.0, std::abs(ax), std::abs(ay)});
    };
    require(near(W.x0, W.y0, S.x0, S.y0), "geometry", "corner (0,0) mismatch");
    require(near(E.x0, E.y0, S.x1, S.y1), "geometry", "corner (1,0) mismatch");
    require(near(W.x1, W.y1, N.x0, N.y0), "geometry", "corner (0,1) mismatch");
    require(near(E.x1, E.y1, N.x1, N.y1), "geometry", "corner (1,1) mismatch");
    return m;
  }

  void eval(double r, double s, double& x, double& y, double& xr, double& xs, double& yr,
            double& ys) const {
    if (!coons_) {
      fn_(r, s, x, y, xr, xs, yr, ys);
      return;
    }
    const auto& W = edges_[0];
    const auto& E = edges_[1];
    const auto& S = edges_[2];
    const auto& N = edges_[3];
    double wx, wy, ex, ey, sx, sy, nx, ny;
    double wxd, wyd, exd, eyd, sxd, syd, nxd, nyd;
    W.eval(s, wx, wy); W.deriv(s, wxd, wyd);
    E.eval(s, ex, ey); E.deriv(s, exd, eyd);
    S.eval(r, sx, sy); S.deriv(r, sxd, syd);
    N.eval(r, nx, ny); N.deriv(r, nxd, nyd);
    const double c00x = W.x0, c00y = W.y0, c01x = W.x1, c01y = W.y1;
    const double c10x = E.x0, c10y = E.y0, c11x = E.x1, c11y = E.y1;

    x = (1 - r) * wx + r * ex + (1 - s) * sx + s * nx -
        ((1 - r) * (1 - s) * c00x + r * (1 - s) * c10x + (1 - r) * s * c01x + r * s * c11x);
    y = (1 - r) * wy + r * ey + (1 - s) * sy + s * ny -
        ((1 - r) * (1 - s) * c00y + r * (1 - s) * c10y + (1 - r) * s * c01y + r * s * c11y);
    xr = -wx + ex + (1 - s) * sxd + s * nxd -
         (-(1 - s) * c00x + (1 - s) * c10x - s * c01x + s * c11x);
    yr = -wy + ey + (1 - s) * syd + s * nyd -
         (-(1 - s) * c00y + (1 - s) * c10y - s * c01y + s * c11y);
    xs = (1 - r) * wxd + r * exd - sx + nx -
         (-(1 - r) * c00x - r * c10x + (1 - r) * c01x + r * c11x);
    ys = (1 - r) * wyd + r * eyd - sy + ny -
         (-(1 - r) * c00y - r * c10y + (1 - r) * c01y + r * c11y);
  }

 private:
  AnalyticFn fn_;
  std::array<Curve, 4> edges_{};
  bool coons_ = false;
};

inline BlockMapping transfinite_mapping(const std::array<Curve, 4>& edges) {
  return BlockMapping::transfinite(edges);
}

/// Metric data on the (n+1)^2 grid.
struct MetricTerms {
  int n = 0;
  Vec x, y;               // physical node coordinates
  Vec J;                  // Jacobian determinant
  Vec rx, ry, sx, sy;     // inverse metrics
};

enum class MetricMode { Analytic, Discrete };

inline MetricTerms evaluate_metrics(const BlockMapping& map, int n,
                                    MetricMode mode = MetricMode::Analytic,
                                    const SbpOperators1D* ops = nullptr) {
  MetricTerms mt;
  mt.n = n;
  const Index sz = Index(n + 1) * (n + 1);
  mt.x.resize(sz); mt.y.resize(sz);
  mt.J.resize(sz);
  mt.rx.resize(sz); mt.ry.resize(sz); mt.sx.resize(sz); mt.sy.resize(sz);
  Vec xr(sz), xs(sz), yr(sz), ys(sz);
  for (Index is = 0; is <= n; ++is)
    for (Index ir = 0; ir <= n; ++ir) {
      const Index k = grid_index(ir, is, n);
      double xrv, xsv, yrv, ysv;
      map.eval(double(ir) / n, double(is) / n, mt.x[k], mt.y[k], xrv, xsv, yrv, ysv);
      xr[k] = xrv; xs[k] = xsv; yr[k] = yrv; ys[k] = ysv;
    }
  if (mode == MetricMode::Discrete) {
    require(ops != nullptr && ops->n == n, "geometry", "discrete metrics need matching operators");
    // overwrite partials with D applied to the coordinate grids, line by line
    Mat Dd = ops->D * ops->h;  // dimensionless derivative (unit reference interval)
    for (Index is = 0; is <= n; ++is) {
      Vec xline(n + 1), yline(n + 1);
      for (Index ir = 0; ir <= n; ++ir) {
        xline[ir] = mt.x[grid_index(ir, is, n)];
        yline[ir] = mt.y[grid_index(ir, is, n)];
      }
      Vec dx = Dd * xline, dy = Dd * yline;
      for (Index ir = 0; ir <= n; ++ir) {
        xr[grid_index(ir, is, n)] = dx[ir] * n;
        yr[grid_index(ir, is, n)] = dy[ir] * n;
      }
    }
    for (Index ir = 0; ir <= n; ++ir) {
      Vec xline(n + 1), yline(n + 1);
      for (Index is = 0; is <= n; ++is) {
        xline[is] = mt.x[grid_index(ir, is, n)];
        yline[is] = mt.y[grid_index(ir, is, n)];
      }
      Vec dx = Dd * xline, dy = Dd * yline;
      for (Index is = 0; is <= n; ++is) {
        xs[grid_index(ir, is, n)] = dx[is] * n;
        ys[grid_index(ir, is, n)] = dy[is] * n;
      }
    }
  }
  for (Index k = 0; k < sz; ++k) {
    mt.J[k] = xr[k] * ys[k] - xs[k] * yr[k];
    if (!(mt.J[k] > 0.0)) fail("geometry", "degenerate mapping: J <= 0 at a grid node");
    mt.rx[k] = ys[k] / mt.J[k];
    mt.ry[k] = -xs[k] / mt.J[k];
    mt.sx[k] = -yr[k] / mt.J[k];
    mt.sy[k] = xr[k] / mt.J[k];
  }
  return mt;
}

/// Surface Jacobians and outward unit normals along the four faces.
struct SurfaceGeometry {
  std::array<Vec, 4> SJ;       // per face (index 0..3 for faces 1..4)
  std::array<Vec, 4> nx, ny;   // unit outward normal components
  std::array<Vec, 4> fx, fy;   // physical coordinates of face nodes
};

inline SurfaceGeometry surface_geometry(const BlockMapping& map, int n) {
  SurfaceGeometry sg;
  for (int face = 1; face <= 4; ++face) {
    Vec sj(n + 1), nxv(n + 1), nyv(n + 1), fx(n + 1), fy(n + 1);
    for (Index i = 0; i <= n; ++i) {
      const double t = double(i) / n;
      double r = 0, s = 0;
      if (face == 1) { r = 0; s = t; }
      if (face == 2) { r = 1; s = t; }
      if (face == 3) { r = t; s = 0; }
      if (face == 4) { r = t; s = 1; }
      double x, y, xr, xs, yr, ys;
      map.eval(r, s, x, y, xr, xs, yr, ys);
      fx[i] = x; fy[i] = y;
      double v = 0;
      switch (face) {
        case 1: v = std::hypot(xs, ys); nxv[i] = -ys / v; nyv[i] = xs / v; break;
        case 2: v = std::hypot(xs, ys); nxv[i] = ys / v; nyv[i] = -xs / v; break;
        case 3: v = std::hypot(xr, yr); nxv[i] = yr / v; nyv[i] = -xr / v; break;
        case 4: v = std::hypot(xr, yr); nxv[i] = -yr / v; nyv[i] = xr / v; break;
      }
      require(v > 0.0, "geometry", "degenerate face edge (zero tangent)");
      sj[i] = v;
    }
    sg.SJ[face - 1] = sj;
    sg.nx[face - 1] = nxv;
    sg.ny[face - 1] = nyv;
    sg.fx[face - 1] = fx;
    sg.fy[face - 1] = fy;
  }
  return sg;
}

/// Physical coefficient tensor b(x,y) -> (bxx, bxy, byy).
using MaterialFn = std::function<void(double x, double y, double& bxx, double& bxy, double& byy)>;

inline MaterialFn identity_material() {
  return [](double, double, double& bxx, double& bxy, double& byy) {
    bxx = 1; bxy = 0; byy = 1;
  };
}

inline Coefficients2D transform_coefficients(const MetricTerms& mt, const MaterialFn& b) {
  Coefficients2D co;
  co.n = mt.n;
  const Index sz = mt.J.size();
  co.crr.resize(sz); co.css.resize(sz); co.crs.resize(sz);
  for (Index k = 0; k < sz; ++k) {
    double bxx, bxy, byy;
    b(mt.x[k], mt.y[k], bxx, bxy, byy);
    require(bxx > 0 && byy > 0 && bxx * byy - bxy * bxy > 0, "geometry",
            "material tensor not positive definite");
    const double J = mt.J[k];
    co.crr[k] = J * (bxx * mt.rx[k] * mt.rx[k] + 2 * bxy * mt.rx[k] * mt.ry[k] +
                     byy * mt.ry[k] * mt.ry[k]);
    co.css[k] = J * (bxx * mt.sx[k] * mt.sx[k] + 2 * bxy * mt.sx[k] * mt.sy[k] +
                     byy * mt.sy[k] * mt.sy[k]);
    co.crs[k] = J * (bxx * mt.rx[k] * mt.sx[k] + bxy * (mt.rx[k] * mt.sy[k] + mt.ry[k] * mt.sx[k]) +
                     byy * mt.ry[k] * mt.sy[k]);
  }
  validate_coefficients(co);
  return co;
}

}  // namespace hsbp
