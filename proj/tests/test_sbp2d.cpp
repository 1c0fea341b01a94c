#include <catch2/catch.hpp>

#include "hsbp/sbp2d.hpp"
#include "hsbp/verify.hpp"

#include <random>

using namespace hsbp;

namespace {

Coefficients2D constant_coeffs(int n, double crr, double css, double crs) {
  Coefficients2D co;
  co.n = n;
  const Index sz = Index(n + 1) * (n + 1);
  co.crr = Vec::Constant(sz, crr);
  co.css = Vec::Constant(sz, css);
  co.crs = Vec::Constant(sz, crs);
  return co;
}

Vec interpolate(int n, const std::function<double(double, double)>& f) {
  Vec u(Index(n + 1) * (n + 1));
  for (Index is = 0; is <= n; ++is)
    for (Index ir = 0; ir <= n; ++ir)
      u[grid_index(ir, is, n)] = f(double(ir) / n, double(is) / n);
  return u;
}

}  // namespace

TEST_CASE("grid index follows the stacked-vector convention", "[sbp2d]") {
  const Index n = 6;
  CHECK(grid_index(0, 0, n) == 0);
  CHECK(grid_index(n, 0, n) == n);
  CHECK(grid_index(0, 1, n) == n + 1);
  CHECK_THROWS_AS(grid_index(n + 1, 0, n), Error);
}

TEST_CASE("face extraction selects face values", "[sbp2d]") {
  const int n = 6;
  auto ops = build_first_derivative(1, n);
  auto co = constant_coeffs(n, 1, 1, 0);
  auto f1 = build_face_operators(1, ops, co, Vec::Ones(n + 1));
  Vec u = interpolate(n, [](double r, double s) { return std::sin(3 * r + s) + r * s; });
  Vec face = f1.L * u;
  for (Index j = 0; j <= n; ++j)
    CHECK(face[j] == Approx(std::sin(1.0 * j / n)).margin(1e-14));
  for (int k = 1; k <= 4; ++k) {
    auto fk = build_face_operators(k, ops, co, Vec::Ones(n + 1));
    Mat LLt = Mat(SpMat(fk.L * SpMat(fk.L.transpose())));
    CHECK((LLt - Mat::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("weighted boundary derivatives annihilate constants", "[sbp2d]") {
  const int n = 8;
  for (int p : {1, 2}) {
    auto ops = build_first_derivative(p, n);
    auto co = random_spd_coefficients(5, n);
    Vec ones = Vec::Ones(Index(n + 1) * (n + 1));
    for (int k = 1; k <= 4; ++k) {
      auto f = build_face_operators(k, ops, co, Vec::Ones(n + 1));
      CHECK((f.G * ones).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("face-1 weighted derivative of r is minus the face quadrature", "[sbp2d]") {
  const int n = 5;
  auto ops = build_first_derivative(1, n);
  auto co = constant_coeffs(n, 1, 1, 0);
  auto f1 = build_face_operators(1, ops, co, Vec::Ones(n + 1));
  Vec u = interpolate(n, [](double r, double) { return r; });
  Vec g = f1.G * u;
  // weighted derivative of r along face 1 is minus the face quadrature H
  for (Index j = 0; j <= n; ++j) CHECK(g[j] == Approx(-f1.Hface[j]).margin(1e-13));
}

TEST_CASE("stiffness quadrature is exact on bilinear integrands", "[sbp2d]") {
  const int n = 8;
  auto ops = build_first_derivative(2, n);
  auto co = constant_coeffs(n, 1, 1, 0.5);
  auto sb = build_stiffness(ops, co);
  Vec u = interpolate(n, [](double r, double s) { return r * s; });
  // u_r = s, u_s = r: int s^2 = 1/3, int c_rs r s = 1/8
  CHECK(u.dot(sb.Arr * u) == Approx(1.0 / 3.0).margin(1e-12));
  CHECK(u.dot(sb.Ass * u) == Approx(1.0 / 3.0).margin(1e-12));
  CHECK(u.dot(sb.Ars * u) == Approx(0.125).margin(1e-12));
}

TEST_CASE("stiffness bundle invariants", "[sbp2d]") {
  const int n = 8;
  auto ops = build_first_derivative(2, n);
  auto co = random_spd_coefficients(17, n);
  auto sb = build_stiffness(ops, co);
  const Index sz = Index(n + 1) * (n + 1);
  Vec ones = Vec::Ones(sz);
  CHECK((sb.total * ones).cwiseAbs().maxCoeff() <
        1e-12 * Mat(sb.total).cwiseAbs().maxCoeff() * double(sz));
  Mat Ars(sb.Ars), Asr(sb.Asr);
  CHECK((Ars.transpose() - Asr).cwiseAbs().maxCoeff() == 0.0);
  Mat T(sb.total);
  CHECK((T - T.transpose()).cwiseAbs().maxCoeff() == 0.0);
  Eigen::SelfAdjointEigenSolver<Mat> es(T);
  CHECK(es.eigenvalues().minCoeff() > -1e-10 * T.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Mat> err(Mat(sb.Arr));
  CHECK(err.eigenvalues().minCoeff() > -1e-10 * Mat(sb.Arr).cwiseAbs().maxCoeff());
}

TEST_CASE("volume-surface split identity", "[sbp2d]") {
  {
    const int n = 4;
    auto ops = build_first_derivative(1, n);
    auto co = constant_coeffs(n, 1, 1, 0);
    auto sb = build_stiffness(ops, co);
    std::array<FaceOperators, 4> faces;
    for (int k = 1; k <= 4; ++k)
      faces[k - 1] = build_face_operators(k, ops, co, Vec::Ones(n + 1));
    CHECK(verify_split_identity(ops, co, sb, faces) < 1e-12);
  }
  for (int p : {2, 3}) {
    const int n = (p == 2) ? 8 : 12;
    auto ops = build_first_derivative(p, n);
    auto co = random_spd_coefficients(23 + p, n);
    auto sb = build_stiffness(ops, co);
    std::array<FaceOperators, 4> faces;
    for (int k = 1; k <= 4; ++k)
      faces[k - 1] = build_face_operators(k, ops, co, Vec::Ones(n + 1));
    const double dev = verify_split_identity(ops, co, sb, faces);
    INFO("p=" << p);
    CHECK(dev < 1e-11 * Mat(sb.total).cwiseAbs().maxCoeff());
  }
}

TEST_CASE("psi_min equals the smaller eigenvalue of the coefficient matrix", "[sbp2d]") {
  {
    auto co = constant_coeffs(3, 1, 1, 0);
    CHECK((psi_min_field(co).array() - 1.0).abs().maxCoeff() < 1e-15);
  }
  {
    auto co = constant_coeffs(3, 2, 1, 1);
    const double expect = (3.0 - std::sqrt(5.0)) / 2.0;
    CHECK(psi_min_field(co)[0] == Approx(expect).epsilon(1e-12));
  }
  {
    auto co = constant_coeffs(3, 4.2, 4.2, 0);
    CHECK((psi_min_field(co).array() - 4.2).abs().maxCoeff() < 1e-14);
  }
  auto co = random_spd_coefficients(99, 31);  // ~1000 nodes
  Vec psi = psi_min_field(co);
  for (Index k = 0; k < psi.size(); ++k) {
    Eigen::Matrix2d C;
    C << co.crr[k], co.crs[k], co.crs[k], co.css[k];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(C);
    REQUIRE(psi[k] == Approx(es.eigenvalues().minCoeff()).margin(1e-13));
  }
}

TEST_CASE("coefficient validation rejects indefinite fields", "[sbp2d]") {
  auto co = constant_coeffs(4, 1, 1, 2);  // crr*css < crs^2
  CHECK_THROWS_AS(validate_coefficients(co), Error);
  CHECK_THROWS_AS(build_stiffness(build_first_derivative(1, 4), co), Error);
}

TEST_CASE("Kronecker application is line-by-line", "[sbp2d]") {
  const int n = 10;
  auto ops = build_first_derivative(2, n);
  Vec u = interpolate(n, [](double r, double) { return r * r * r; });
  for (Index is = 0; is <= n; ++is) {
    Vec line(n + 1);
    for (Index ir = 0; ir <= n; ++ir) line[ir] = u[grid_index(ir, is, n)];
    Vec d = ops.D * line;
    // interior rows are exact on cubics for 2p = 4
    for (Index ir = 4; ir <= n - 4; ++ir) {
      const double r = double(ir) / n;
      REQUIRE(d[ir] == Approx(3 * r * r).margin(1e-10));
    }
  }
}

TEST_CASE("face quadrature approximates the weighted boundary integral", "[sbp2d]") {
  // v^T L_1^T G_1 u  ~  -int_0^1 v (c_rr du/dr + c_rs du/ds)|_{r=0} ds
  const int n = 12;
  auto ops = build_first_derivative(2, n);
  auto co = constant_coeffs(n, 2.0, 1.0, 0.5);
  auto f1 = build_face_operators(1, ops, co, Vec::Ones(n + 1));
  Vec u = interpolate(n, [](double r, double s) { return r * s + r * r * s; });
  Vec v = interpolate(n, [](double, double s) { return 1 + s; });
  // at r=0: du/dr = s, du/ds = 0; integrand v c_rr s = 2 s (1+s); integral 5/3
  const double val = v.dot(f1.L.transpose() * (f1.G * u));
  CHECK(val == Approx(-5.0 / 3.0).margin(1e-10));
}
