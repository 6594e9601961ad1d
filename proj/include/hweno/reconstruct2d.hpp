#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "hweno/reconstruct1d.hpp"

namespace hweno {

// Stencil inputs for the 3x3 big stencil, cells labeled 1..9 left-to-right,
// bottom-to-top, target cell is label 5. Layout of z:
//   z[0..8]   zeroth moments of cells 1..9
//   z[9..13]  x first moments of cells {2,4,5,6,8}
//   z[14..18] y first moments of cells {2,4,5,6,8}
struct StencilData2 {
  std::array<double, 19> z{};
};

struct Weights5 {
  std::array<double, 5> g{};
};

// Interface point ids: edge (W=0, E=1, S=2, N=3) * 3 + gauss index k, where
// the gauss offsets along the edge are {-sqrt(15)/10, 0, +sqrt(15)/10}.
inline constexpr int kIfacePoints = 12;
// Internal point ids: ky * 3 + kx over the tensor Gauss grid.
inline constexpr int kInternalPoints = 9;

namespace detail2d {

// monomial basis x^p y^q with p+q <= 4, graded ordering
inline constexpr int kNB4 = 15;
inline constexpr int kNB2 = 6;
inline constexpr std::array<std::array<int, 2>, kNB4> kBasis4{{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1},
    {1, 2}, {0, 3}, {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}};

inline constexpr std::array<std::array<int, 2>, 9> kLabelOffset{{
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {0, 0}, {1, 0}, {-1, 1}, {0, 1},
    {1, 1}}};

// cells carrying first moments, and their slot in z
inline constexpr std::array<int, 5> kMomentCells{2, 4, 5, 6, 8};

inline int moment_slot(int label) {
  for (int s = 0; s < 5; ++s)
    if (kMomentCells[s] == label) return s;
  return -1;
}

inline double mom(int p, double a) {  // int_{a-1/2}^{a+1/2} t^p dt
  return (std::pow(a + 0.5, p + 1) - std::pow(a - 0.5, p + 1)) / (p + 1);
}
inline double mom1(int p, double a) {  // int t^p (t - a) dt
  return mom(p + 1, a) - a * mom(p, a);
}

template <int NB>
inline void zero_row(double* r) {
  for (int k = 0; k < NB; ++k) r[k] = 0.0;
}

// condition rows in scaled local coordinates, cells of unit size
template <class Basis>
inline void row_zeroth(const Basis& basis, int a, int b, double* r) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    r[k] = mom(basis[k][0], a) * mom(basis[k][1], b);
}
template <class Basis>
inline void row_firstx(const Basis& basis, int a, int b, double* r) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    r[k] = mom1(basis[k][0], a) * mom(basis[k][1], b);
}
template <class Basis>
inline void row_firsty(const Basis& basis, int a, int b, double* r) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    r[k] = mom(basis[k][0], a) * mom1(basis[k][1], b);
}

inline double eval_basis4(const double* c, double x, double y) {
  double v = 0.0;
  for (int k = 0; k < kNB4; ++k)
    v += c[k] * std::pow(x, kBasis4[k][0]) * std::pow(y, kBasis4[k][1]);
  return v;
}

// d^(l1+l2)/dx^l1 dy^l2 of x^p y^q: returns factor and reduced powers
inline double dmono(int p, int q, int l1, int l2, int& pr, int& qr) {
  if (l1 > p || l2 > q) return 0.0;
  double c = 1.0;
  for (int t = 0; t < l1; ++t) c *= (p - t);
  for (int t = 0; t < l2; ++t) c *= (q - t);
  pr = p - l1;
  qr = q - l2;
  return c;
}

}  // namespace detail2d

// Precomputed evaluation rows and smoothness quadratic forms for the
// quartic big-stencil polynomial; constrained least squares solved once.
struct Quartic2Kernel {
  std::array<std::array<double, 19>, kIfacePoints> iface{};
  std::array<std::array<double, 19>, kInternalPoints> internal{};
  std::array<double, 19 * 19> beta{};      // symmetric quadratic form
  std::array<double, 15 * 19> coeff_map{}; // inputs -> monomial coefficients
};

// The four quadratic small-stencil kernels (exact interpolation).
struct Quadratic2Kernels {
  std::array<std::array<int, 6>, 4> index{};  // slots of the 6 inputs in z
  std::array<std::array<std::array<double, 6>, kIfacePoints>, 4> iface{};
  std::array<std::array<double, 36>, 4> beta{};
  std::array<std::array<double, 36>, 4> coeff_map{};
};

struct Kernel2 {
  double dx = 0.0, dy = 0.0;
  Quartic2Kernel big;
  Quadratic2Kernels small;
};

namespace detail2d {

inline void gauss_points(std::array<std::array<double, 2>, kIfacePoints>& pi,
                         std::array<std::array<double, 2>, kInternalPoints>& pn) {
  const double gs = std::sqrt(15.0) / 10.0;
  const double off[3] = {-gs, 0.0, gs};
  for (int k = 0; k < 3; ++k) {
    pi[0 * 3 + k] = {-0.5, off[k]};  // W
    pi[1 * 3 + k] = {+0.5, off[k]};  // E
    pi[2 * 3 + k] = {off[k], -0.5};  // S
    pi[3 * 3 + k] = {off[k], +0.5};  // N
  }
  for (int ky = 0; ky < 3; ++ky)
    for (int kx = 0; kx < 3; ++kx) pn[ky * 3 + kx] = {off[kx], off[ky]};
}

// B[m][n] = sum over multi-indices l, 1 <= |l| <= maxorder, of
//   (dy/dx)^(l1-l2) * int over the unit cell of D^l phi_m D^l phi_n,
// which makes z' K' B K z exactly the Eq.-(2.8) style indicator on the
// physical cell for any aspect ratio.
template <class Basis>
inline Eigen::MatrixXd beta_matrix(const Basis& basis, double aspect,
                                   int maxorder) {
  const int nb = static_cast<int>(basis.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nb, nb);
  for (int l1 = 0; l1 <= maxorder; ++l1) {
    for (int l2 = 0; l2 + l1 <= maxorder; ++l2) {
      if (l1 + l2 < 1) continue;
      const double fac = std::pow(aspect, l1 - l2);
      for (int mi = 0; mi < nb; ++mi) {
        int p1, q1, p2, q2;
        const double c1 = dmono(basis[mi][0], basis[mi][1], l1, l2, p1, q1);
        if (c1 == 0.0) continue;
        for (int ni = 0; ni < nb; ++ni) {
          const double c2 =
              dmono(basis[ni][0], basis[ni][1], l1, l2, p2, q2);
          if (c2 == 0.0) continue;
          B(mi, ni) += fac * c1 * c2 * mom(p1 + p2, 0.0) * mom(q1 + q2, 0.0);
        }
      }
    }
  }
  return B;
}

}  // namespace detail2d

// Builds the 15-coefficient quartic kernel: 11 equality constraints (zeroth
// moments of all nine cells, both first moments of the target cell), the
// remaining 8 first-moment conditions satisfied in the least-squares sense
// via null-space elimination.
inline Quartic2Kernel build_quartic_kernel(double dx, double dy) {
  using namespace detail2d;
  if (!(dx > 0.0) || !(dy > 0.0))
    throw std::invalid_argument("build_quartic_kernel: need dx, dy > 0");

  Eigen::MatrixXd E(11, kNB4), F(8, kNB4);
  std::array<int, 11> eidx{};
  std::array<int, 8> fidx{};
  double row[kNB4];

  int re = 0;
  for (int lab = 1; lab <= 9; ++lab) {
    row_zeroth(kBasis4, kLabelOffset[lab - 1][0], kLabelOffset[lab - 1][1],
               row);
    for (int k = 0; k < kNB4; ++k) E(re, k) = row[k];
    eidx[re++] = lab - 1;
  }
  row_firstx(kBasis4, 0, 0, row);
  for (int k = 0; k < kNB4; ++k) E(re, k) = row[k];
  eidx[re++] = 9 + moment_slot(5);
  row_firsty(kBasis4, 0, 0, row);
  for (int k = 0; k < kNB4; ++k) E(re, k) = row[k];
  eidx[re++] = 14 + moment_slot(5);

  int rf = 0;
  for (int lab : {2, 4, 6, 8}) {
    const int a = kLabelOffset[lab - 1][0], b = kLabelOffset[lab - 1][1];
    row_firstx(kBasis4, a, b, row);
    for (int k = 0; k < kNB4; ++k) F(rf, k) = row[k];
    fidx[rf++] = 9 + moment_slot(lab);
    row_firsty(kBasis4, a, b, row);
    for (int k = 0; k < kNB4; ++k) F(rf, k) = row[k];
    fidx[rf++] = 14 + moment_slot(lab);
  }

  // null-space elimination of the equality constraints
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(E.transpose());
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd R1 =
      qr.matrixQR().topRows(11).triangularView<Eigen::Upper>();
  if (R1.diagonal().cwiseAbs().minCoeff() < 1e-10)
    throw std::runtime_error("build_quartic_kernel: rank-deficient constraints");
  Eigen::MatrixXd Q1 = Q.leftCols(11), N = Q.rightCols(kNB4 - 11);
  Eigen::MatrixXd FN = F * N;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> lsq(FN);
  if (lsq.rank() < kNB4 - 11)
    throw std::runtime_error(
        "build_quartic_kernel: degenerate least-squares system");

  Eigen::MatrixXd K(kNB4, 19);
  K.setZero();
  for (int j = 0; j < 19; ++j) {
    Eigen::VectorXd be = Eigen::VectorXd::Zero(11),
                    bf = Eigen::VectorXd::Zero(8);
    for (int r = 0; r < 11; ++r)
      if (eidx[r] == j) be(r) = 1.0;
    for (int r = 0; r < 8; ++r)
      if (fidx[r] == j) bf(r) = 1.0;
    Eigen::VectorXd cp = Q1 * R1.transpose().triangularView<Eigen::Lower>().solve(be);
    Eigen::VectorXd tt = lsq.solve(bf - F * cp);
    K.col(j) = cp + N * tt;
  }

  Quartic2Kernel out;
  for (int r = 0; r < kNB4; ++r)
    for (int j = 0; j < 19; ++j) out.coeff_map[r * 19 + j] = K(r, j);

  std::array<std::array<double, 2>, kIfacePoints> pi;
  std::array<std::array<double, 2>, kInternalPoints> pn;
  gauss_points(pi, pn);
  auto fill_rows = [&](const std::array<double, 2>& pt, double* dst) {
    Eigen::RowVectorXd e(kNB4);
    for (int k = 0; k < kNB4; ++k)
      e(k) = std::pow(pt[0], kBasis4[k][0]) * std::pow(pt[1], kBasis4[k][1]);
    Eigen::RowVectorXd r = e * K;
    for (int j = 0; j < 19; ++j) dst[j] = r(j);
  };
  for (int p = 0; p < kIfacePoints; ++p) fill_rows(pi[p], out.iface[p].data());
  for (int p = 0; p < kInternalPoints; ++p)
    fill_rows(pn[p], out.internal[p].data());

  Eigen::MatrixXd B = beta_matrix(kBasis4, dy / dx, 4);
  Eigen::MatrixXd BB = K.transpose() * B * K;
  for (int r = 0; r < 19; ++r)
    for (int c = 0; c < 19; ++c) out.beta[r * 19 + c] = BB(r, c);
  return out;
}

// Exact interpolation systems for the four quadratic small stencils; each
// matches four zeroth moments plus the target cell's two first moments.
inline Quadratic2Kernels build_quadratic_kernels(double dx, double dy) {
  using namespace detail2d;
  if (!(dx > 0.0) || !(dy > 0.0))
    throw std::invalid_argument("build_quadratic_kernels: need dx, dy > 0");
  constexpr std::array<std::array<int, 2>, kNB2> basis2{{
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  const std::array<std::array<int, 4>, 4> stencils{{
      {1, 2, 4, 5}, {2, 3, 5, 6}, {4, 5, 7, 8}, {5, 6, 8, 9}}};

  Quadratic2Kernels out;
  std::array<std::array<double, 2>, kIfacePoints> pi;
  std::array<std::array<double, 2>, kInternalPoints> pn;
  gauss_points(pi, pn);
  Eigen::MatrixXd B2 = beta_matrix(basis2, dy / dx, 2);

  for (int n = 0; n < 4; ++n) {
    Eigen::MatrixXd A(kNB2, kNB2);
    double row[kNB2];
    for (int c = 0; c < 4; ++c) {
      const int lab = stencils[n][c];
      row_zeroth(basis2, kLabelOffset[lab - 1][0], kLabelOffset[lab - 1][1],
                 row);
      for (int k = 0; k < kNB2; ++k) A(c, k) = row[k];
      out.index[n][c] = lab - 1;
    }
    row_firstx(basis2, 0, 0, row);
    for (int k = 0; k < kNB2; ++k) A(4, k) = row[k];
    out.index[n][4] = 9 + moment_slot(5);
    row_firsty(basis2, 0, 0, row);
    for (int k = 0; k < kNB2; ++k) A(5, k) = row[k];
    out.index[n][5] = 14 + moment_slot(5);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible())
      throw std::runtime_error("build_quadratic_kernels: singular system");
    Eigen::MatrixXd Kn = lu.inverse();  // coeffs = Kn * local inputs

    for (int p = 0; p < kIfacePoints; ++p) {
      Eigen::RowVectorXd e(kNB2);
      for (int k = 0; k < kNB2; ++k)
        e(k) = std::pow(pi[p][0], basis2[k][0]) *
               std::pow(pi[p][1], basis2[k][1]);
      Eigen::RowVectorXd r = e * Kn;
      for (int j = 0; j < kNB2; ++j) out.iface[n][p][j] = r(j);
    }
    Eigen::MatrixXd BB = Kn.transpose() * B2 * Kn;
    for (int r = 0; r < kNB2; ++r)
      for (int c = 0; c < kNB2; ++c) {
        out.beta[n][r * kNB2 + c] = BB(r, c);
        out.coeff_map[n][r * kNB2 + c] = Kn(r, c);
      }
  }
  return out;
}

inline Kernel2 build_kernel2(double dx, double dy) {
  Kernel2 k;
  k.dx = dx;
  k.dy = dy;
  k.big = build_quartic_kernel(dx, dy);
  k.small = build_quadratic_kernels(dx, dy);
  return k;
}

// Big-polynomial value at an interface point (linear scheme and Step 5.2/5.3).
inline double linear_point_2d(const Kernel2& k, const StencilData2& s,
                              int iface_point) {
  const auto& r = k.big.iface[iface_point];
  double v = 0.0;
  for (int j = 0; j < 19; ++j) v += r[j] * s.z[j];
  return v;
}

inline double linear_internal_2d(const Kernel2& k, const StencilData2& s,
                                 int internal_point) {
  const auto& r = k.big.internal[internal_point];
  double v = 0.0;
  for (int j = 0; j < 19; ++j) v += r[j] * s.z[j];
  return v;
}

// Smoothness indicators of the five candidates.
inline std::array<double, 5> smoothness_2d(const Kernel2& k,
                                           const StencilData2& s) {
  std::array<double, 5> beta{};
  double acc = 0.0;
  for (int r = 0; r < 19; ++r) {
    double t = 0.0;
    const double* Br = &k.big.beta[r * 19];
    for (int c = 0; c < 19; ++c) t += Br[c] * s.z[c];
    acc += s.z[r] * t;
  }
  beta[0] = acc;
  for (int n = 0; n < 4; ++n) {
    double zl[6];
    for (int j = 0; j < 6; ++j) zl[j] = s.z[k.small.index[n][j]];
    double a = 0.0;
    for (int r = 0; r < 6; ++r) {
      double t = 0.0;
      const double* Br = &k.small.beta[n][r * 6];
      for (int c = 0; c < 6; ++c) t += Br[c] * zl[c];
      a += zl[r] * t;
    }
    beta[n + 1] = a;
  }
  return beta;
}

// Nonlinear weights for the five 2D candidates.
inline std::array<double, 5> nonlinear_weights5(
    const std::array<double, 5>& beta, const Weights5& g, double eps) {
  double tau = 0.0;
  for (int n = 1; n < 5; ++n) tau += std::abs(beta[0] - beta[n]);
  tau = (tau / 4.0) * (tau / 4.0);
  std::array<double, 5> w{};
  double wsum = 0.0;
  for (int n = 0; n < 5; ++n) {
    w[n] = g.g[n] * (1.0 + tau / (beta[n] + eps));
    wsum += w[n];
  }
  for (int n = 0; n < 5; ++n) w[n] /= wsum;
  return w;
}

// HWENO value at an interface point: nonlinear convex combination of the
// quartic with the four quadratics under artificial linear weights.
inline double hweno_point_2d(const Kernel2& k, const StencilData2& s,
                             int iface_point, const Weights5& g,
                             double eps = kWenoEps) {
  double p[5];
  p[0] = linear_point_2d(k, s, iface_point);
  for (int n = 0; n < 4; ++n) {
    const auto& r = k.small.iface[n][iface_point];
    double v = 0.0;
    for (int j = 0; j < 6; ++j) v += r[j] * s.z[k.small.index[n][j]];
    p[n + 1] = v;
  }
  const auto w = nonlinear_weights5(smoothness_2d(k, s), g, eps);
  double high = p[0];
  for (int n = 1; n < 5; ++n) high -= g.g[n] * p[n];
  double out = w[0] * high / g.g[0];
  for (int n = 1; n < 5; ++n) out += w[n] * p[n];
  return out;
}

// All three Gauss-point values of one edge (edge in {W=0,E=1,S=2,N=3}) with
// the smoothness indicators and nonlinear weights computed once.
inline void hweno_edge_values(const Kernel2& k, const StencilData2& s,
                              int edge, const Weights5& g, double eps,
                              double out[3]) {
  const auto w = nonlinear_weights5(smoothness_2d(k, s), g, eps);
  double zl[4][6];
  for (int n = 0; n < 4; ++n)
    for (int j = 0; j < 6; ++j) zl[n][j] = s.z[k.small.index[n][j]];
  for (int kk = 0; kk < 3; ++kk) {
    const int p = edge * 3 + kk;
    double cand[5];
    cand[0] = linear_point_2d(k, s, p);
    for (int n = 0; n < 4; ++n) {
      const auto& r = k.small.iface[n][p];
      double v = 0.0;
      for (int j = 0; j < 6; ++j) v += r[j] * zl[n][j];
      cand[n + 1] = v;
    }
    double high = cand[0];
    for (int n = 1; n < 5; ++n) high -= g.g[n] * cand[n];
    double val = w[0] * high / g.g[0];
    for (int n = 1; n < 5; ++n) val += w[n] * cand[n];
    out[kk] = val;
  }
}

// Dimension-by-dimension limited replacement of the target cell's first
// moments; each direction reuses the 1D moment modification.
inline std::array<double, 2> modify_moments_2d(const Stencil1& row_stencil,
                                               const Stencil1& col_stencil,
                                               const Weights3& g,
                                               double eps = kWenoEps) {
  return {modify_first_moment(row_stencil, g, eps),
          modify_first_moment(col_stencil, g, eps)};
}

}  // namespace hweno
