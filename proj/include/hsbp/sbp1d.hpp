#pragma once

#include "hsbp/sbp1d_closure6.hpp"
#include "hsbp/sbp1d_tables.hpp"
#include "hsbp/types.hpp"

#include <cmath>

namespace hsbp {

/// Diagonal-norm SBP first-derivative operator on [0,1] with n intervals.
/// H is the diagonal quadrature (length units), Q the dimensionless skew part
/// with Q + Q^T = e_n e_n^T - e_0 e_0^T, and D = H^{-1} Q.
struct SbpOperators1D {
  int p = 0;   ///< half order; interior accuracy 2p
  int n = 0;   ///< intervals (n+1 grid points)
  double h = 0;
  Vec H;       ///< norm diagonal, includes the factor h
  Mat Q;
  Mat D;
  Vec d0, dn;  ///< boundary derivative rows (not rows of D)
};

/// Variable-coefficient second derivative: H D2 = -A + c_n e_n d_n^T - c_0 e_0 d_0^T.
struct VariableD2 {
  Vec c;
  Mat A;
  Mat D2;
};

struct BorrowingConstants {
  int l;         ///< window width of the boundary minima
  double beta;
  double alpha;  ///< min(H_00, H_nn)/h
};

/// Smallest interval count for which the boundary closures fit.
inline int min_intervals(int p) {
  switch (p) {
    case 1: return 2;
    case 2: return 7;
    case 3: return 11;
    default: fail("sbp1d", "unsupported half-order p=" + std::to_string(p));
  }
}

inline bool& sbp_verify_flag() {
#ifdef NDEBUG
  static bool flag = false;
#else
  static bool flag = true;
#endif
  return flag;
}

namespace detail {

inline Vec norm_diag(int p, int n) {
  const int m = n + 1;
  Vec H = Vec::Ones(m);
  auto put = [&](auto const& w) {
    const int nb = static_cast<int>(w.size());
    for (int i = 0; i < nb; ++i) {
      H[i] = w[i];
      H[m - 1 - i] = w[i];
    }
  };
  if (p == 1) put(tables::kH1);
  else if (p == 2) put(tables::kH2);
  else put(tables::kH3);
  return H;
}

template <int R, int C>
Mat d1_dimensionless(const double (&block)[R][C], const auto& interior, int n) {
  const int m = n + 1;
  const int half = (static_cast<int>(interior.size()) - 1) / 2;
  Mat D = Mat::Zero(m, m);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) D(i, j) = block[i][j];
  for (int i = R; i < m - R; ++i)
    for (int k = 0; k < static_cast<int>(interior.size()); ++k)
      D(i, i - half + k) = interior[k];
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) D(m - 1 - i, m - 1 - j) = -block[i][j];
  return D;
}

inline void verify_first_derivative(const SbpOperators1D& ops) {
  const int m = ops.n + 1;
  Mat S = ops.Q + ops.Q.transpose();
  S(0, 0) += 1.0;
  S(m - 1, m - 1) -= 1.0;
  require(S.cwiseAbs().maxCoeff() < 1e-12, "sbp1d", "Q + Q^T != corner matrix");
  require((ops.D * Vec::Ones(m)).cwiseAbs().maxCoeff() < 1e-11 * ops.n, "sbp1d",
          "D does not annihilate constants");
  Vec x = Vec::LinSpaced(m, 0.0, 1.0);
  for (int q = 1; q <= ops.p; ++q) {
    Vec u = x.array().pow(q);
    Vec du = q * x.array().pow(q - 1);
    require((ops.D * u - du).cwiseAbs().maxCoeff() < 1e-9 * ops.n, "sbp1d",
            "boundary rows miss monomial exactness");
    require(std::abs(ops.d0.dot(u) - du[0]) + std::abs(ops.dn.dot(u) - du[m - 1]) <
                1e-9 * ops.n,
            "sbp1d", "d0/dn miss monomial exactness");
  }
}

}  // namespace detail

inline SbpOperators1D build_first_derivative(int p, int n, bool verify = sbp_verify_flag()) {
  require(p >= 1 && p <= 3, "sbp1d", "unsupported half-order p=" + std::to_string(p));
  require(n >= min_intervals(p), "sbp1d",
          "n=" + std::to_string(n) + " too small for 2p=" + std::to_string(2 * p) +
              " closure (need n >= " + std::to_string(min_intervals(p)) + ")");
  SbpOperators1D ops;
  ops.p = p;
  ops.n = n;
  ops.h = 1.0 / n;
  const int m = n + 1;
  ops.H = detail::norm_diag(p, n) * ops.h;

  Mat Dd;
  if (p == 1) Dd = detail::d1_dimensionless(tables::kD1Block1, tables::kD1Interior1, n);
  else if (p == 2) Dd = detail::d1_dimensionless(tables::kD1Block2, tables::kD1Interior2, n);
  else Dd = detail::d1_dimensionless(tables::kD1Block3, tables::kD1Interior3, n);

  ops.D = Dd / ops.h;
  ops.Q = (detail::norm_diag(p, n)).asDiagonal() * Dd;

  ops.d0 = Vec::Zero(m);
  ops.dn = Vec::Zero(m);
  auto put_d0 = [&](auto const& row) {
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      ops.d0[k] = row[k] / ops.h;
      ops.dn[m - 1 - k] = -row[k] / ops.h;
    }
  };
  if (p == 1) put_d0(tables::kD0Row1);
  else if (p == 2) put_d0(tables::kD0Row2);
  else put_d0(tables::kD0Row3);

  if (verify) detail::verify_first_derivative(ops);
  return ops;
}

/// The stiffness-like matrix A^(c) alone (units 1/length); A = D^T C H D + R.
inline Mat stiffness_matrix(const SbpOperators1D& ops, const Vec& c) {
  const int m = ops.n + 1;
  require(c.size() == m, "sbp1d", "coefficient length mismatch");
  require(c.minCoeff() > 0.0, "sbp1d", "coefficient must be strictly positive");
  const double h = ops.h;
  Mat A = ops.D.transpose() * (c.array() * ops.H.array()).matrix().asDiagonal() * ops.D;
  A = ((A + A.transpose()) * 0.5).eval();  // exact symmetry

  auto add_row = [&](const Vec& s, double w) {
    // outer product first: s_i*s_j is commutative, so w*(s_i*s_j) stays
    // bitwise symmetric
    Mat outer = s * s.transpose();
    A.noalias() += w * outer;
  };

  if (ops.p == 1) {
    for (int k = 1; k < m - 1; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 1] = 1; s[k] = -2; s[k + 1] = 1;
      add_row(s, 0.25 * c[k] / h);
    }
    return A;
  }
  if (ops.p == 2) {
    using namespace tables;
    // third-difference rows
    auto c3avg = [&](int k) {
      return (k <= (m - 1) / 2) ? 0.5 * (c[k] + c[k + 1]) : 0.5 * (c[k - 1] + c[k]);
    };
    {
      Vec s = Vec::Zero(m);
      for (int j = 0; j < 6; ++j) s[j] = kD3SpecialRow4[j];
      add_row(s, kC3w2 * c3avg(2) / 18.0 / h);
    }
    for (int k = 3; k <= m - 5; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 1] = -1; s[k] = 3; s[k + 1] = -3; s[k + 2] = 1;
      double w = 1.0;
      if (k == 3) w = kC3w3;
      if (k == m - 5) w = kC3w3;
      add_row(s, w * c3avg(k) / 18.0 / h);
    }
    {
      Vec s = Vec::Zero(m);
      for (int j = 0; j < 6; ++j) s[m - 1 - j] = -kD3SpecialRow4[j];
      add_row(s, kC3w2 * c3avg(m - 3) / 18.0 / h);
    }
    // fourth-difference rows
    for (int k = 2; k <= m - 3; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 2] = 1; s[k - 1] = -4; s[k] = 6; s[k + 1] = -4; s[k + 2] = 1;
      double w = 1.0;
      if (k == 2 || k == m - 3) w = kC4w2;
      if (k == 3 || k == m - 4) w = kC4w3;
      add_row(s, w * c[k] / 144.0 / h);
    }
    return A;
  }
  // p == 3: centered fourth-difference band plus derived closure blocks
  using namespace closure6;
  for (int k = 2; k <= m - 3; ++k) {
    Vec s = Vec::Zero(m);
    s[k - 2] = 1; s[k - 1] = -4; s[k] = 6; s[k + 1] = -4; s[k + 2] = 1;
    add_row(s, kGamma4 * c[k] / h);
  }
  if (kGamma5 != 0.0) {
    for (int k = 2; k <= m - 4; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 2] = 1; s[k - 1] = -5; s[k] = 10; s[k + 1] = -10; s[k + 2] = 5; s[k + 3] = -1;
      add_row(s, kGamma5 * c[k] / h);
    }
    for (int k = 3; k <= m - 3; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 3] = -1; s[k - 2] = 5; s[k - 1] = -10; s[k] = 10; s[k + 1] = -5; s[k + 2] = 1;
      add_row(s, kGamma5 * c[k] / h);
    }
  }
  if (kGamma6 != 0.0) {
    for (int k = 3; k <= m - 4; ++k) {
      Vec s = Vec::Zero(m);
      s[k - 3] = 1; s[k - 2] = -6; s[k - 1] = 15; s[k] = -20;
      s[k + 1] = 15; s[k + 2] = -6; s[k + 3] = 1;
      add_row(s, kGamma6 * c[k] / h);
    }
  }
  constexpr int B = kClosureSize;  // 9: blocks on [0..8]^2
  for (int j = 0; j < B; ++j) {
    for (int r = 0; r < B; ++r)
      for (int s = 0; s < B; ++s) {
        A(r, s) += c[j] * kClosure[j][r][s] / h;
        A(m - 1 - r, m - 1 - s) += c[m - 1 - j] * kClosure[j][r][s] / h;
      }
  }
  // left/right closures overlap on short grids; accumulation order differs
  // across the diagonal, so restore exact symmetry once
  A = ((A + A.transpose()) * 0.5).eval();
  return A;
}

inline VariableD2 build_second_derivative(const SbpOperators1D& ops, const Vec& c,
                                          bool verify = sbp_verify_flag()) {
  const int m = ops.n + 1;
  VariableD2 out;
  out.c = c;
  out.A = stiffness_matrix(ops, c);
  Mat B = -out.A;
  B.row(m - 1) += c[m - 1] * ops.dn.transpose();
  B.row(0) -= c[0] * ops.d0.transpose();
  out.D2 = ops.H.cwiseInverse().asDiagonal() * B;
  if (verify) {
    require((out.A - out.A.transpose()).cwiseAbs().maxCoeff() == 0.0, "sbp1d",
            "A not symmetric");
    double scale = out.A.cwiseAbs().maxCoeff();
    require((out.A * Vec::Ones(m)).cwiseAbs().maxCoeff() < 1e-12 * scale * m, "sbp1d",
            "A does not annihilate constants");
  }
  return out;
}

/// Borrowing-lemma constants (table values for the operators in use).
inline BorrowingConstants borrowing_constants(int p, const SbpOperators1D& ops) {
  require(p >= 1 && p <= 3, "sbp1d", "unsupported half-order p=" + std::to_string(p));
  require(p == ops.p, "sbp1d", "order mismatch between p and operators");
  BorrowingConstants bc;
  bc.l = 2 * p;
  switch (p) {
    case 1: bc.beta = 0.363636363; break;
    case 2: bc.beta = 0.2505765857; break;
    default: bc.beta = 0.1878687080; break;
  }
  const int m = ops.n + 1;
  bc.alpha = std::min(ops.H[0], ops.H[m - 1]) / ops.h;
  return bc;
}

}  // namespace hsbp
