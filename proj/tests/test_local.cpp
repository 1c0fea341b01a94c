#include <catch2/catch.hpp>

#include "hsbp/local_problem.hpp"
#include "hsbp/solve.hpp"
#include "hsbp/verify.hpp"

using namespace hsbp;

namespace {

BlockMapping unit_map() {
  return BlockMapping::analytic([](double r, double s, double& x, double& y, double& xr,
                                   double& xs, double& yr, double& ys) {
    x = r; y = s; xr = 1; xs = 0; yr = 0; ys = 1;
  });
}

struct LocalSetup {
  SbpOperators1D ops;
  std::array<FaceOperators, 4> faces;
  LocalProblem lp;
};

LocalSetup make_local(int p, int n, const Coefficients2D& co, double tau_scale,
                      std::array<FaceRole, 4> roles) {
  LocalSetup ls{build_first_derivative(p, n), {}, {}};
  auto bc = borrowing_constants(p, ls.ops);
  for (int k = 1; k <= 4; ++k)
    ls.faces[k - 1] = build_face_operators(k, ls.ops, co, Vec::Ones(n + 1));
  auto pp = penalty_parameters(co, bc, ls.ops.h, tau_scale);
  auto mt = evaluate_metrics(unit_map(), n);
  ls.lp = assemble_local(ls.ops, build_stiffness(ls.ops, co), ls.faces, pp, mt, roles);
  return ls;
}

constexpr std::array<FaceRole, 4> kAllDirichlet{FaceRole::Dirichlet, FaceRole::Dirichlet,
                                                FaceRole::Dirichlet, FaceRole::Dirichlet};
constexpr std::array<FaceRole, 4> kAllNeumann{FaceRole::Neumann, FaceRole::Neumann,
                                              FaceRole::Neumann, FaceRole::Neumann};

}  // namespace

TEST_CASE("penalty parameters follow the equality bound", "[local]") {
  const int n = 4;
  Coefficients2D co;
  co.n = n;
  const Index sz = 25;
  co.crr = Vec::Ones(sz);
  co.css = Vec::Ones(sz);
  co.crs = Vec::Zero(sz);
  auto ops = build_first_derivative(1, n);
  auto bc = borrowing_constants(1, ops);
  REQUIRE(bc.alpha == Approx(0.5));
  auto pp = penalty_parameters(co, bc, 0.25, 1.0);
  // tau = 2/(h beta) = 8/0.363636363 for unit coefficients
  for (int k = 0; k < 4; ++k)
    for (Index j = 0; j <= n; ++j)
      CHECK(pp.tau[k][j] == Approx(8.0 / 0.363636363).epsilon(1e-12));

  auto pp2 = penalty_parameters(co, bc, 0.25, 2.0);
  for (Index j = 0; j <= n; ++j)
    CHECK(pp2.tau[0][j] == Approx(2.0 * pp.tau[0][j]).epsilon(1e-14));

  // cross term enters through c_rs^2 / alpha
  co.crs = Vec::Constant(sz, 0.3);
  auto pp3 = penalty_parameters(co, bc, 0.25, 1.0);
  Vec psi = psi_min_field(co);
  const double expect = 2.0 / (0.25 * 0.363636363 * psi[0]) +
                        2.0 * 0.09 / (0.25 * 0.5 * psi[0]);
  CHECK(pp3.tau[0][0] == Approx(expect).epsilon(1e-12));
}

TEST_CASE("local matrix is exactly symmetric and reproduces constants", "[local]") {
  const int n = 8;
  auto co = random_spd_coefficients(31, n);
  auto ls = make_local(2, n, co, 1.0, kAllDirichlet);
  Mat M(ls.lp.M);
  CHECK((M - M.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // F_k^T 1 = -H tau 1
  const Index sz = Index(n + 1) * (n + 1);
  for (int k = 0; k < 4; ++k) {
    Vec lhs = ls.lp.F[k].transpose() * Vec::Ones(sz);
    Vec rhs = -(ls.lp.Hface[k].array() * ls.lp.tau[k].array()).matrix();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11 * rhs.cwiseAbs().maxCoeff());
  }

  // constant state: g_D = 1 on all faces, f = 0  =>  u = 1
  Vec ones_face = Vec::Ones(n + 1);
  std::array<const Vec*, 4> data{&ones_face, &ones_face, &ones_face, &ones_face};
  Vec q = local_rhs(ls.lp, Vec::Zero(sz), data);
  SpdFactorization fac(ls.lp.M);
  Vec u = fac.solve(q);
  CHECK((u.array() - 1.0).abs().maxCoeff() < 1e-11);
}

TEST_CASE("zero data gives a zero boundary contribution", "[local]") {
  const int n = 5;
  auto co = random_spd_coefficients(3, n);
  auto ls = make_local(1, n, co, 1.0, kAllDirichlet);
  Vec zero_face = Vec::Zero(n + 1);
  std::array<const Vec*, 4> data{&zero_face, &zero_face, &zero_face, &zero_face};
  Vec q = local_rhs(ls.lp, Vec::Zero(Index(n + 1) * (n + 1)), data);
  CHECK(q.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("all-Dirichlet local operators are positive definite", "[local]") {
  for (int p : {1, 2, 3}) {
    const int n = 3 * p + 2;
    int ok = 0;
    double worst = 1e300;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto co = random_spd_coefficients(seed, n);
      auto ls = make_local(p, n, co, 1.0, kAllDirichlet);
      const double lmin = min_eigenvalue(Mat(ls.lp.M));
      worst = std::min(worst, lmin);
      if (lmin > 0) ++ok;
    }
    INFO("p=" << p << " worst lambda_min=" << worst);
    CHECK(ok == 20);
  }
}

TEST_CASE("three Neumann faces keep the operator positive definite", "[local]") {
  for (int p : {1, 2, 3}) {
    const int n = 3 * p + 2;
    int ok = 0;
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
      auto co = random_spd_coefficients(seed, n);
      auto ls = make_local(p, n, co, 1.0,
                           {FaceRole::Dirichlet, FaceRole::Neumann, FaceRole::Neumann,
                            FaceRole::Neumann});
      if (min_eigenvalue(Mat(ls.lp.M)) > 0) ++ok;
    }
    INFO("p=" << p);
    CHECK(ok == 15);
  }
}

TEST_CASE("all-Neumann local operator is singular with the constant null vector",
          "[local]") {
  for (int p : {1, 2, 3}) {
    const int n = 3 * p + 2;
    auto co = random_spd_coefficients(7 + p, n);
    auto ls = make_local(p, n, co, 1.0, kAllNeumann);
    Mat M(ls.lp.M);
    const double lmin = min_eigenvalue(M);
    const double scale = M.cwiseAbs().maxCoeff();
    INFO("p=" << p << " lmin=" << lmin);
    CHECK(std::abs(lmin) < 1e-12 * scale);
    CHECK((M * Vec::Ones(M.rows())).cwiseAbs().maxCoeff() < 1e-10 * scale);
  }
}

TEST_CASE("penalty scaling sweep shows plateau and linear growth", "[local]") {
  std::vector<double> scales{1, 2, 4, 8, 16, 32};
  auto rows = tau_sweep(1, 5, 12345, scales);
  REQUIRE(rows.size() == scales.size());
  for (const auto& r : rows) CHECK(r.lambda_min > 0);
  const double ratio = rows[5].lambda_max / rows[4].lambda_max;
  CHECK(ratio == Approx(2.0).epsilon(0.15));
  CHECK(std::abs(rows[5].lambda_min - rows[3].lambda_min) <
        0.1 * std::abs(rows[3].lambda_min));
}

TEST_CASE("linear solutions are reproduced on one block", "[local]") {
  const int n = 8;
  const int p = 2;
  auto ops = build_first_derivative(p, n);
  auto mt = evaluate_metrics(unit_map(), n);
  auto co = transform_coefficients(mt, identity_material());
  auto ls = make_local(p, n, co, 1.0, kAllDirichlet);
  const Index sz = Index(n + 1) * (n + 1);
  std::array<Vec, 4> bdry;
  std::array<const Vec*, 4> data{};
  auto sg = surface_geometry(unit_map(), n);
  for (int k = 0; k < 4; ++k) {
    bdry[k] = sg.fx[k] + sg.fy[k];
    data[k] = &bdry[k];
  }
  Vec q = local_rhs(ls.lp, Vec::Zero(sz), data);
  SpdFactorization fac(ls.lp.M);
  Vec u = fac.solve(q);
  Vec exact = mt.x + mt.y;
  CHECK((u - exact).cwiseAbs().maxCoeff() < 1e-10);
}
