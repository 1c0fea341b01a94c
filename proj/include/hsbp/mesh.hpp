#pragma once

#include "hsbp/geometry.hpp"
#include "hsbp/types.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace hsbp {

enum class BcType { Dirichlet, Neumann };

/// One curved quadrilateral block: corners in reference order
/// c00=(r0,s0), c10=(r1,s0), c01=(r0,s1), c11=(r1,s1); faces may be arcs.
struct BlockSpec {
  std::array<double, 2> c00{}, c10{}, c01{}, c11{};
  struct ArcSpec {
    bool is_arc = false;
    double cx = 0, cy = 0, r = 0;
  };
  std::array<ArcSpec, 4> arcs{};  // per face 1..4 (index face-1)

  Curve edge(int face) const {
    double ax, ay, bx, by;
    switch (face) {
      case 1: ax = c00[0]; ay = c00[1]; bx = c01[0]; by = c01[1]; break;
      case 2: ax = c10[0]; ay = c10[1]; bx = c11[0]; by = c11[1]; break;
      case 3: ax = c00[0]; ay = c00[1]; bx = c10[0]; by = c10[1]; break;
      default: ax = c01[0]; ay = c01[1]; bx = c11[0]; by = c11[1]; break;
    }
    const auto& a = arcs[face - 1];
    if (a.is_arc) return Curve::arc(ax, ay, bx, by, a.cx, a.cy, a.r);
    return Curve::line(ax, ay, bx, by);
  }

  BlockMapping mapping() const {
    return BlockMapping::transfinite({edge(1), edge(2), edge(3), edge(4)});
  }
};

struct InteriorFace {
  int block_p = 0, face_p = 0;  // plus side
  int block_m = 0, face_m = 0;  // minus side
  bool reversed = false;        // minus side runs opposite to plus side
  bool jump = false;            // prescribed [u] = delta
};

struct BoundaryFace {
  int block = 0, face = 0;
  BcType bc = BcType::Dirichlet;
};

struct Mesh {
  std::string name;
  std::vector<BlockSpec> blocks;
  std::vector<InteriorFace> interior;
  std::vector<BoundaryFace> boundary;
};

inline Vec orient_face_vector(const Vec& v, bool reversed) {
  if (!reversed) return v;
  return v.reverse();
}

namespace detail {

inline void face_point(const BlockSpec& b, int face, double t, double& x, double& y) {
  double r = 0, s = 0;
  switch (face) {
    case 1: r = 0; s = t; break;
    case 2: r = 1; s = t; break;
    case 3: r = t; s = 0; break;
    default: r = t; s = 1; break;
  }
  double xr, xs, yr, ys;
  b.mapping().eval(r, s, x, y, xr, xs, yr, ys);
}

}  // namespace detail

/// Structural validation: each face appears exactly once, interior faces conform.
inline void validate_mesh(const Mesh& mesh, int probes = 7) {
  const int nb = static_cast<int>(mesh.blocks.size());
  std::vector<std::array<int, 4>> seen(nb, {0, 0, 0, 0});
  auto touch = [&](int b, int k, const char* what) {
    require(b >= 0 && b < nb, "mesh", std::string("bad block index in ") + what);
    require(k >= 1 && k <= 4, "mesh", std::string("bad face index in ") + what);
    require(seen[b][k - 1]++ == 0, "mesh",
            "block " + std::to_string(b) + " face " + std::to_string(k) + " listed twice");
  };
  for (const auto& f : mesh.interior) {
    touch(f.block_p, f.face_p, "iface");
    touch(f.block_m, f.face_m, "iface");
  }
  for (const auto& f : mesh.boundary) touch(f.block, f.face, "bc");
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < 4; ++k)
      require(seen[b][k] == 1, "mesh",
              "block " + std::to_string(b) + " face " + std::to_string(k + 1) +
                  " untagged (must appear in iface or bc)");
  // conformity
  for (const auto& f : mesh.interior) {
    for (int i = 0; i <= probes; ++i) {
      const double t = double(i) / probes;
      const double tm = f.reversed ? 1.0 - t : t;
      double xa, ya, xb, yb;
      detail::face_point(mesh.blocks[f.block_p], f.face_p, t, xa, ya);
      detail::face_point(mesh.blocks[f.block_m], f.face_m, tm, xb, yb);
      require(std::hypot(xa - xb, ya - yb) < 1e-10, "mesh",
              "nonconforming interface between block " + std::to_string(f.block_p) + " and " +
                  std::to_string(f.block_m));
    }
  }
}

/// Trace layout: contiguous (n+1)-point slots per interior face, plus-side ordering.
struct TraceNumbering {
  int n = 0;
  Index total = 0;
  std::vector<Index> offset;
  Index volume_total = 0;
};

inline TraceNumbering build_trace_numbering(const Mesh& mesh, int n) {
  TraceNumbering tn;
  tn.n = n;
  tn.offset.resize(mesh.interior.size());
  for (std::size_t f = 0; f < mesh.interior.size(); ++f) tn.offset[f] = Index(f) * (n + 1);
  tn.total = Index(mesh.interior.size()) * (n + 1);
  tn.volume_total = Index(mesh.blocks.size()) * (n + 1) * (n + 1);
  return tn;
}

// ---------------------------------------------------------------------------
// mesh text format
//
//   block x00 y00 x10 y10 x01 y01 x11 y11
//   arc k cx cy radius          (face k of the preceding block)
//   iface B+ k+ B- k- {+|-} [jump]
//   bc B k {D|N}
//
// '#' starts a comment; unknown records are a hard error.
// ---------------------------------------------------------------------------
inline Mesh parse_mesh(std::istream& in, const std::string& name = "mesh") {
  Mesh mesh;
  mesh.name = name;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string rec;
    if (!(ls >> rec)) continue;
    auto want = [&](bool ok, const std::string& msg) {
      require(ok, "mesh", "line " + std::to_string(lineno) + ": " + msg);
    };
    if (rec == "block") {
      BlockSpec b;
      want(bool(ls >> b.c00[0] >> b.c00[1] >> b.c10[0] >> b.c10[1] >> b.c01[0] >> b.c01[1] >>
               b.c11[0] >> b.c11[1]),
           "block needs 8 corner coordinates");
      mesh.blocks.push_back(b);
    } else if (rec == "arc") {
      want(!mesh.blocks.empty(), "arc before any block");
      int k;
      BlockSpec::ArcSpec a;
      a.is_arc = true;
      want(bool(ls >> k >> a.cx >> a.cy >> a.r), "arc needs k cx cy radius");
      want(k >= 1 && k <= 4, "arc face out of range");
      mesh.blocks.back().arcs[k - 1] = a;
    } else if (rec == "iface") {
      InteriorFace f;
      std::string orient;
      want(bool(ls >> f.block_p >> f.face_p >> f.block_m >> f.face_m >> orient),
           "iface needs B+ k+ B- k- orient");
      want(orient == "+" || orient == "-", "orient must be + or -");
      f.reversed = (orient == "-");
      std::string tag;
      if (ls >> tag) {
        want(tag == "jump", "unknown iface tag '" + tag + "'");
        f.jump = true;
      }
      mesh.interior.push_back(f);
    } else if (rec == "bc") {
      BoundaryFace f;
      std::string t;
      want(bool(ls >> f.block >> f.face >> t), "bc needs B k {D|N}");
      want(t == "D" || t == "N", "bc type must be D or N");
      f.bc = (t == "D") ? BcType::Dirichlet : BcType::Neumann;
      mesh.boundary.push_back(f);
    } else {
      fail("mesh", "line " + std::to_string(lineno) + ": unknown record '" + rec + "'");
    }
  }
  validate_mesh(mesh);
  return mesh;
}

// ---------------------------------------------------------------------------
// built-in meshes
// ---------------------------------------------------------------------------

/// One unit block, all faces Dirichlet.
inline Mesh builtin_single() {
  Mesh m;
  m.name = "single";
  BlockSpec b;
  b.c00 = {0, 0}; b.c10 = {1, 0}; b.c01 = {0, 1}; b.c11 = {1, 1};
  m.blocks.push_back(b);
  for (int k = 1; k <= 4; ++k) m.boundary.push_back({0, k, BcType::Dirichlet});
  validate_mesh(m);
  return m;
}

/// Two unit blocks sharing one locked interface, outer faces Dirichlet.
inline Mesh builtin_two_block() {
  Mesh m;
  m.name = "two-block";
  BlockSpec a, b;
  a.c00 = {0, 0}; a.c10 = {1, 0}; a.c01 = {0, 1}; a.c11 = {1, 1};
  b.c00 = {1, 0}; b.c10 = {2, 0}; b.c01 = {1, 1}; b.c11 = {2, 1};
  m.blocks = {a, b};
  m.interior.push_back({0, 2, 1, 1, false, false});
  m.boundary = {{0, 1, BcType::Dirichlet}, {0, 3, BcType::Dirichlet}, {0, 4, BcType::Dirichlet},
                {1, 2, BcType::Dirichlet}, {1, 3, BcType::Dirichlet}, {1, 4, BcType::Dirichlet}};
  validate_mesh(m);
  return m;
}

/// Disk-in-square mesh of the convergence study: unit-circle jump interface in
/// [-2,2]^2; 56 blocks, 96 interior faces; x=±2 Dirichlet, y=±2 Neumann.
/// Layout: 2x2 core + 8-block ring inside the disk (8 jump arcs), a middle
/// layer of 8 radial + 8 fan blocks out to an intermediate contour, and an
/// outer layer of 24 radial + 4 corner blocks reaching the square.
inline Mesh builtin_disk56() {
  using std::cos;
  using std::sin;
  const double pi = std::numbers::pi;
  const double a = 0.5;    // core half-width
  const double wm = 1.5;   // intermediate contour half-width
  const double tip = 1.75; // axis fan tip radius
  const double wq = 2.0;   // outer square half-width
  const double yb = 4.0 / 3.0;  // outer-side span covered by radial blocks

  Mesh m;
  m.name = "disk56";

  auto add_block = [&](std::array<double, 2> c00, std::array<double, 2> c10,
                       std::array<double, 2> c01, std::array<double, 2> c11) {
    BlockSpec b;
    b.c00 = c00; b.c10 = c10; b.c01 = c01; b.c11 = c11;
    m.blocks.push_back(b);
    return static_cast<int>(m.blocks.size()) - 1;
  };
  auto arc_face = [&](int blk, int face) {
    m.blocks[blk].arcs[face - 1] = {true, 0.0, 0.0, 1.0};
  };
  auto iface = [&](int bp, int kp, int bm, int km, bool rev, bool jump = false) {
    m.interior.push_back({bp, kp, bm, km, rev, jump});
  };

  // --- core 2x2 (indices 0..3: SW, SE, NW, NE) ---
  const int cSW = add_block({-a, -a}, {0, -a}, {-a, 0}, {0, 0});
  const int cSE = add_block({0, -a}, {a, -a}, {0, 0}, {a, 0});
  const int cNW = add_block({-a, 0}, {0, 0}, {-a, a}, {0, a});
  const int cNE = add_block({0, 0}, {a, 0}, {0, a}, {a, a});
  iface(cSW, 2, cSE, 1, false);
  iface(cNW, 2, cNE, 1, false);
  iface(cSW, 4, cNW, 3, false);
  iface(cSE, 4, cNE, 3, false);

  // vertices on rays at 45*k degrees
  auto rot = [&](std::array<double, 2> p, int q) {
    q = ((q % 4) + 4) % 4;
    for (int i = 0; i < q; ++i) p = {-p[1], p[0]};
    return p;
  };
  auto core_pt = [&](int k) -> std::array<double, 2> {
    static const double pts[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                     {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    k = ((k % 8) + 8) % 8;
    return {a * pts[k][0], a * pts[k][1]};
  };
  auto circ_pt = [&](int k) -> std::array<double, 2> {
    const double th = pi / 4 * k;
    return {cos(th), sin(th)};
  };

  // --- ring of 8 between the core and the circle (indices 4..11) ---
  // sector k spans angles [45k, 45(k+1)]; face 1 = core edge, face 2 = arc.
  std::array<int, 8> ring{};
  for (int k = 0; k < 8; ++k)
    ring[k] = add_block(core_pt(k), circ_pt(k), core_pt(k + 1), circ_pt(k + 1));
  for (int k = 0; k < 8; ++k) {
    arc_face(ring[k], 2);
    iface(ring[k], 4, ring[(k + 1) % 8], 3, false);
  }
  iface(ring[0], 1, cNE, 2, false);
  iface(ring[1], 1, cNE, 4, true);
  iface(ring[2], 1, cNW, 4, true);
  iface(ring[3], 1, cNW, 1, true);
  iface(ring[4], 1, cSW, 1, true);
  iface(ring[5], 1, cSW, 3, false);
  iface(ring[6], 1, cSE, 3, false);
  iface(ring[7], 1, cSE, 2, false);

  // --- intermediate contour: 24 vertices, 6 per quadrant ---
  //   w(6q+0) = axis tip, w(6q+3) = contour corner
  auto contour = [&](int idx) -> std::array<double, 2> {
    idx = ((idx % 24) + 24) % 24;
    const int quad = idx / 6;
    std::array<double, 2> p{};
    switch (idx % 6) {
      case 0: p = {tip, 0}; break;
      case 1: p = {wm, 0.5}; break;
      case 2: p = {wm, 1.0}; break;
      case 3: p = {wm, wm}; break;
      case 4: p = {1.0, wm}; break;
      case 5: p = {0.5, wm}; break;
    }
    return rot(p, quad);
  };

  // --- middle layer: 8 radial (12..19) + 8 fans (20..27) ---
  std::array<int, 8> midr{}, fan{};
  for (int k = 0; k < 8; ++k) {
    midr[k] = add_block(circ_pt(k), contour(3 * k + 1), circ_pt(k + 1), contour(3 * k + 2));
    arc_face(midr[k], 1);
  }
  for (int k = 0; k < 8; ++k)
    fan[k] = add_block(circ_pt(k), contour(3 * k - 1), contour(3 * k + 1), contour(3 * k));
  for (int k = 0; k < 8; ++k) {
    iface(ring[k], 2, midr[k], 1, false, true);     // jump; plus side = disk
    iface(fan[k], 1, midr[k], 3, false);
    iface(fan[(k + 1) % 8], 3, midr[k], 4, false);
  }

  // --- outer layer: 24 radial (28..51) + 4 corner blocks (52..55) ---
  // side q chain = contour indices 6q-3 .. 6q+3; square images evenly spaced
  auto sq_img = [&](int q, int t) -> std::array<double, 2> {
    return rot({wq, -yb + (2 * yb / 6) * t}, q);
  };
  std::array<std::array<int, 6>, 4> outer{};
  for (int q = 0; q < 4; ++q)
    for (int t = 0; t < 6; ++t) {
      const int j = 6 * q - 3 + t;
      outer[q][t] = add_block(contour(j), sq_img(q, t), contour(j + 1), sq_img(q, t + 1));
    }
  std::array<int, 4> wrap{};
  for (int q = 0; q < 4; ++q)
    wrap[q] = add_block(contour(6 * q + 3), sq_img(q, 6), sq_img(q + 1, 0), rot({wq, wq}, q));

  auto contour_owner = [&](int j) {
    // middle-layer block and face that carries contour edge w(j) -> w(j+1)
    struct Owner { int blk; int face; bool rev; };
    j = ((j % 24) + 24) % 24;
    if (j % 3 == 0) return Owner{fan[j / 3], 4, true};
    if (j % 3 == 1) return Owner{midr[j / 3], 2, false};
    return Owner{fan[(j / 3 + 1) % 8], 2, false};
  };
  for (int q = 0; q < 4; ++q) {
    const BcType bc = (q % 2 == 0) ? BcType::Dirichlet : BcType::Neumann;
    for (int t = 0; t < 6; ++t) {
      const auto own = contour_owner(6 * q - 3 + t);
      iface(own.blk, own.face, outer[q][t], 1, own.rev);
      m.boundary.push_back({outer[q][t], 2, bc});
      if (t >= 1) iface(outer[q][t - 1], 4, outer[q][t], 3, false);
    }
    const BcType bc_next = ((q + 1) % 2 == 0) ? BcType::Dirichlet : BcType::Neumann;
    iface(outer[q][5], 4, wrap[q], 3, false);
    iface(wrap[q], 1, outer[(q + 1) % 4][0], 3, false);
    m.boundary.push_back({wrap[q], 2, bc});
    m.boundary.push_back({wrap[q], 4, bc_next});
  }

  validate_mesh(m);
  return m;
}

inline Mesh builtin_mesh(const std::string& name) {
  if (name == "single") return builtin_single();
  if (name == "two-block") return builtin_two_block();
  if (name == "disk56") return builtin_disk56();
  fail("mesh", "unknown builtin mesh '" + name + "'");
}

inline Mesh load_mesh(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) return builtin_mesh(path.substr(8));
  std::ifstream in(path);
  require(bool(in), "mesh", "cannot open mesh file '" + path + "'");
  return parse_mesh(in, path);
}

}  // namespace hsbp
