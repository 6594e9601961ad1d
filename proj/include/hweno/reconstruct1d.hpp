#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hweno {

// Moments of one scalar field (possibly characteristic-projected) on the
// three-cell stencil {i-1, i, i+1}.
struct Stencil1 {
  double um, u0, up;  // zeroth moments
  double vm, v0, vp;  // first moments
};

struct Weights3 {
  double g0, g1, g2;
};

inline constexpr double kWenoEps = 1e-6;

enum class Side { left, right };

inline Stencil1 mirrored(const Stencil1& s) {
  return {s.up, s.u0, s.um, -s.vp, -s.v0, -s.vm};
}

// Nonlinear weights from smoothness indicators and artificial linear weights,
// sharpened by tau (the squared mean absolute indicator difference).
inline std::array<double, 3> nonlinear_weights3(
    const std::array<double, 3>& beta, const Weights3& g, double eps) {
  const double d01 = std::abs(beta[0] - beta[1]);
  const double d02 = std::abs(beta[0] - beta[2]);
  const double tau = 0.25 * (d01 + d02) * (d01 + d02);
  std::array<double, 3> w{g.g0 * (1.0 + tau / (beta[0] + eps)),
                          g.g1 * (1.0 + tau / (beta[1] + eps)),
                          g.g2 * (1.0 + tau / (beta[2] + eps))};
  const double inv = 1.0 / (w[0] + w[1] + w[2]);
  for (double& x : w) x *= inv;
  return w;
}

namespace detail {

inline void check_finite(const Stencil1& s) {
  if (!(std::isfinite(s.um) && std::isfinite(s.u0) && std::isfinite(s.up) &&
        std::isfinite(s.vm) && std::isfinite(s.v0) && std::isfinite(s.vp)))
    throw std::domain_error("reconstruct1d: non-finite stencil data");
}

// Nonlinear convex combination of one high-degree and two low-degree
// candidates with artificial linear weights.
inline double combine3(const std::array<double, 3>& q,
                       const std::array<double, 3>& beta, const Weights3& g,
                       double eps) {
  const auto w = nonlinear_weights3(beta, g, eps);
  return w[0] * (q[0] - g.g1 * q[1] - g.g2 * q[2]) / g.g0 + w[1] * q[1] +
         w[2] * q[2];
}

inline double sq(double x) { return x * x; }

}  // namespace detail

// Smoothness indicators of the three candidates used by the first-moment
// modification (quartic on {i-1,i,i+1} without the center first moment, plus
// the two one-sided linears).
inline std::array<double, 3> smoothness_1d_moment(const Stencil1& s) {
  using detail::sq;
  const double b0 =
      sq((29.0 / 38.0) * (s.um - s.up) + (60.0 / 19.0) * (s.vm + s.vp)) +
      sq(2.25 * s.um - 4.5 * s.u0 + 2.25 * s.up + 7.5 * (s.vm - s.vp)) +
      (3905.0 / 1444.0) * sq(s.um - s.up + 12.0 * (s.vm + s.vp)) +
      (1.0 / 12.0) * sq(2.5 * s.um - 5.0 * s.u0 + 2.5 * s.up +
                        9.0 * (s.vm - s.vp)) +
      (109341.0 / 448.0) *
          sq(s.um - 2.0 * s.u0 + s.up + 6.0 * (s.vm - s.vp));
  const double b1 = sq(s.u0 - s.um);
  const double b2 = sq(s.up - s.u0);
  return {b0, b1, b2};
}

// Candidate first moments over the center cell.
inline std::array<double, 3> moment_candidates(const Stencil1& s) {
  const double q0 = (5.0 / 76.0) * (s.up - s.um) -
                    (11.0 / 38.0) * (s.vm + s.vp);
  const double q1 = (s.u0 - s.um) / 12.0;
  const double q2 = (s.up - s.u0) / 12.0;
  return {q0, q1, q2};
}

// Limited replacement for the center cell's first moment (the troubled-cell
// modification). Reproduces the exact first moment at fifth order on smooth
// data for any positive weights summing to one.
inline double modify_first_moment(const Stencil1& s, const Weights3& g,
                                  double eps = kWenoEps) {
  detail::check_finite(s);
  return detail::combine3(moment_candidates(s), smoothness_1d_moment(s), g,
                          eps);
}

// Smoothness indicators of the interface candidates (quintic using all six
// moments, and the two quadratics anchored on the center first moment).
inline std::array<double, 3> smoothness_1d_interface(const Stencil1& s) {
  using detail::sq;
  const double b0 =
      sq((19.0 / 108.0) * (s.um - s.up) + (31.0 / 54.0) * (s.vm + s.vp) -
         (241.0 / 27.0) * s.v0) +
      sq(2.25 * s.um - 4.5 * s.u0 + 2.25 * s.up + 7.5 * (s.vm - s.vp)) +
      sq((70.0 / 9.0) * (s.um - s.up) + (200.0 / 9.0) * (s.vm + s.vp) +
         (1280.0 / 9.0) * s.v0) +
      (1.0 / 12.0) * sq(2.5 * s.um - 5.0 * s.u0 + 2.5 * s.up +
                        9.0 * (s.vm - s.vp)) +
      (1.0 / 12.0) * sq((175.0 / 18.0) * (s.um - s.up) +
                        (277.0 / 9.0) * (s.vm + s.vp) +
                        (1546.0 / 9.0) * s.v0) +
      (1.0 / 180.0) * sq((95.0 / 18.0) * (s.um - s.up) +
                         (155.0 / 9.0) * (s.vm + s.vp) +
                         (830.0 / 9.0) * s.v0) +
      (109341.0 / 175.0) * sq(0.625 * s.um - 1.25 * s.u0 + 0.625 * s.up +
                              3.75 * (s.vm - s.vp)) +
      (27553933.0 / 1764.0) * sq((35.0 / 36.0) * (s.um - s.up) +
                                 (77.0 / 18.0) * (s.vm + s.vp) +
                                 (133.0 / 9.0) * s.v0);
  const double b1 = 144.0 * s.v0 * s.v0 +
                    (13.0 / 3.0) * sq(s.um - s.u0 + 12.0 * s.v0);
  const double b2 = 144.0 * s.v0 * s.v0 +
                    (13.0 / 3.0) * sq(s.u0 - s.up + 12.0 * s.v0);
  return {b0, b1, b2};
}

namespace detail {

// Candidate point values at x_{i+1/2}.
inline std::array<double, 3> interface_candidates_right(const Stencil1& s) {
  const double p0 = (13.0 / 108.0) * s.um + (7.0 / 12.0) * s.u0 +
                    (8.0 / 27.0) * s.up + (25.0 / 54.0) * s.vm +
                    (241.0 / 54.0) * s.v0 - (28.0 / 27.0) * s.vp;
  const double p1 = s.um / 6.0 + (5.0 / 6.0) * s.u0 + 8.0 * s.v0;
  const double p2 = (5.0 / 6.0) * s.u0 + s.up / 6.0 + 4.0 * s.v0;
  return {p0, p1, p2};
}

}  // namespace detail

// HWENO point value of u at the cell interface: u^-_{i+1/2} for Side::right,
// u^+_{i-1/2} for Side::left (mirror image about the cell center).
inline double hweno_interface(const Stencil1& s, Side side, const Weights3& g,
                              double eps = kWenoEps) {
  detail::check_finite(s);
  const Stencil1 t = (side == Side::right) ? s : mirrored(s);
  return detail::combine3(detail::interface_candidates_right(t),
                          smoothness_1d_interface(t), g, eps);
}

// Interface value of the high-degree polynomial alone (the linear scheme).
inline double linear_interface(const Stencil1& s, Side side) {
  detail::check_finite(s);
  if (side == Side::right)
    return (13.0 / 108.0) * s.um + (7.0 / 12.0) * s.u0 + (8.0 / 27.0) * s.up +
           (25.0 / 54.0) * s.vm + (241.0 / 54.0) * s.v0 -
           (28.0 / 27.0) * s.vp;
  return (8.0 / 27.0) * s.um + (7.0 / 12.0) * s.u0 + (13.0 / 108.0) * s.up +
         (28.0 / 27.0) * s.vm - (241.0 / 54.0) * s.v0 - (25.0 / 54.0) * s.vp;
}

// Values of the high-degree polynomial at the interior Gauss-Lobatto points
// x_{i -+ sqrt(5)/10}; returned as {left point, right point}.
inline std::array<double, 2> linear_internal(const Stencil1& s) {
  detail::check_finite(s);
  static const double s5 = std::sqrt(5.0);
  const double au = (101.0 / 5400.0) * s5;
  const double av = (841.0 / 13500.0) * s5;
  const double cv = (10289.0 / 6750.0) * s5;
  const double lo = -(au + 1.0 / 24.0) * s.um + (13.0 / 12.0) * s.u0 +
                    (au - 1.0 / 24.0) * s.up - (0.15 + av) * s.vm -
                    cv * s.v0 + (0.15 - av) * s.vp;
  const double hi = (au - 1.0 / 24.0) * s.um + (13.0 / 12.0) * s.u0 -
                    (au + 1.0 / 24.0) * s.up + (av - 0.15) * s.vm +
                    cv * s.v0 + (0.15 + av) * s.vp;
  return {lo, hi};
}

}  // namespace hweno
