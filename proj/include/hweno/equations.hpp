#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hweno {

// Lax-Friedrichs numerical flux,
//   fhat = (f(um) + f(up))/2 - alpha/2 (up - um),
// monotone and consistent whenever alpha bounds |f'| over the states seen.
template <int N, class FluxFn>
inline void lax_friedrichs(const double* um, const double* up, double alpha,
                           FluxFn&& flux, double* out) {
  double fm[N], fp[N];
  flux(um, fm);
  flux(up, fp);
  for (int m = 0; m < N; ++m)
    out[m] = 0.5 * (fm[m] + fp[m]) - 0.5 * alpha * (up[m] - um[m]);
}

// ---------------------------------------------------------------------------
// 1D models
// ---------------------------------------------------------------------------

struct Burgers1D {
  static constexpr int n_vars = 1;
  static constexpr bool is_system = false;
  static constexpr int n_indicators = 1;
  static constexpr std::array<int, 1> indicator_components{0};

  void flux(const double* u, double* f) const { f[0] = 0.5 * u[0] * u[0]; }
  double wavespeed(const double* u) const { return std::abs(u[0]); }
  // advective direction used by the KXRCF indicator: f'(u)
  double advective_speed(const double* u) const { return u[0]; }
  std::array<double, 1> reflect_sign() const { return {1.0}; }
};

struct Euler1D {
  static constexpr int n_vars = 3;
  static constexpr bool is_system = true;
  static constexpr int n_indicators = 2;
  static constexpr std::array<int, 2> indicator_components{0, 2};  // rho, E

  double gamma = 1.4;

  double pressure(const double* q) const {
    return (gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
  }
  double sound_speed(const double* q) const {
    return std::sqrt(gamma * pressure(q) / q[0]);
  }
  void flux(const double* q, double* f) const {
    const double mu = q[1] / q[0];
    const double p = pressure(q);
    f[0] = q[1];
    f[1] = q[1] * mu + p;
    f[2] = mu * (q[2] + p);
  }
  double wavespeed(const double* q) const {
    return std::abs(q[1] / q[0]) + sound_speed(q);
  }
  double advective_speed(const double* q) const { return q[1] / q[0]; }
  std::array<double, 1> reflect_sign_unused() const { return {}; }
  std::array<double, 3> reflect_sign() const { return {1.0, -1.0, 1.0}; }

  // Left/right eigenvector matrices (row-major 3x3) of df/du at the
  // arithmetic average of qa and qb. Rows of L are left eigenvectors,
  // columns of R are right eigenvectors, L = R^{-1}.
  void eigensystem(const double* qa, const double* qb, double* L,
                   double* R) const {
    double q[3];
    for (int m = 0; m < 3; ++m) q[m] = 0.5 * (qa[m] + qb[m]);
    const double rho = q[0];
    const double p = pressure(q);
    if (!(rho > 0.0) || !(p > 0.0))
      throw std::runtime_error(
          "Euler1D::eigensystem: non-physical averaged state");
    const double mu = q[1] / rho;
    const double c = std::sqrt(gamma * p / rho);
    const double H = (q[2] + p) / rho;
    const double g1 = gamma - 1.0;
    const double phi2 = 0.5 * g1 * mu * mu;
    const double ic2 = 1.0 / (c * c);

    // columns: (mu - c, mu, mu + c) waves
    R[0] = 1.0;        R[1] = 1.0;           R[2] = 1.0;
    R[3] = mu - c;     R[4] = mu;            R[5] = mu + c;
    R[6] = H - mu * c; R[7] = 0.5 * mu * mu; R[8] = H + mu * c;

    L[0] = 0.5 * ic2 * (phi2 + mu * c);
    L[1] = 0.5 * ic2 * (-g1 * mu - c);
    L[2] = 0.5 * ic2 * g1;
    L[3] = 1.0 - phi2 * ic2;
    L[4] = g1 * mu * ic2;
    L[5] = -g1 * ic2;
    L[6] = 0.5 * ic2 * (phi2 - mu * c);
    L[7] = 0.5 * ic2 * (-g1 * mu + c);
    L[8] = 0.5 * ic2 * g1;
  }
};

// ---------------------------------------------------------------------------
// 2D models
// ---------------------------------------------------------------------------

struct Burgers2D {
  static constexpr int n_vars = 1;
  static constexpr bool is_system = false;
  static constexpr int n_indicators = 1;
  static constexpr std::array<int, 1> indicator_components{0};

  void flux_x(const double* u, double* f) const { f[0] = 0.5 * u[0] * u[0]; }
  void flux_y(const double* u, double* f) const { f[0] = 0.5 * u[0] * u[0]; }
  double wavespeed_x(const double* u) const { return std::abs(u[0]); }
  double wavespeed_y(const double* u) const { return std::abs(u[0]); }
  double advective_speed_x(const double* u) const { return u[0]; }
  double advective_speed_y(const double* u) const { return u[0]; }
  std::array<double, 1> reflect_sign_x() const { return {1.0}; }
  std::array<double, 1> reflect_sign_y() const { return {1.0}; }
};

struct Euler2D {
  static constexpr int n_vars = 4;
  static constexpr bool is_system = true;
  static constexpr int n_indicators = 2;
  static constexpr std::array<int, 2> indicator_components{0, 3};  // rho, E

  double gamma = 1.4;

  double pressure(const double* q) const {
    return (gamma - 1.0) *
           (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0]);
  }
  double sound_speed(const double* q) const {
    return std::sqrt(gamma * pressure(q) / q[0]);
  }
  void flux_x(const double* q, double* f) const {
    const double mu = q[1] / q[0];
    const double p = pressure(q);
    f[0] = q[1];
    f[1] = q[1] * mu + p;
    f[2] = q[2] * mu;
    f[3] = mu * (q[3] + p);
  }
  void flux_y(const double* q, double* f) const {
    const double nu = q[2] / q[0];
    const double p = pressure(q);
    f[0] = q[2];
    f[1] = q[1] * nu;
    f[2] = q[2] * nu + p;
    f[3] = nu * (q[3] + p);
  }
  double wavespeed_x(const double* q) const {
    return std::abs(q[1] / q[0]) + sound_speed(q);
  }
  double wavespeed_y(const double* q) const {
    return std::abs(q[2] / q[0]) + sound_speed(q);
  }
  double advective_speed_x(const double* q) const { return q[1] / q[0]; }
  double advective_speed_y(const double* q) const { return q[2] / q[0]; }
  // wall with x-normal: flip x-momentum; y-normal: flip y-momentum
  std::array<double, 4> reflect_sign_x() const { return {1.0, -1.0, 1.0, 1.0}; }
  std::array<double, 4> reflect_sign_y() const { return {1.0, 1.0, -1.0, 1.0}; }

  void eigensystem_x(const double* qa, const double* qb, double* L,
                     double* R) const {
    double q[4];
    for (int m = 0; m < 4; ++m) q[m] = 0.5 * (qa[m] + qb[m]);
    eig_dir(q, /*xdir=*/true, L, R);
  }
  void eigensystem_y(const double* qa, const double* qb, double* L,
                     double* R) const {
    double q[4];
    for (int m = 0; m < 4; ++m) q[m] = 0.5 * (qa[m] + qb[m]);
    eig_dir(q, /*xdir=*/false, L, R);
  }

 private:
  void eig_dir(const double* q, bool xdir, double* L, double* R) const {
    const double rho = q[0];
    const double p = pressure(q);
    if (!(rho > 0.0) || !(p > 0.0))
      throw std::runtime_error(
          "Euler2D::eigensystem: non-physical averaged state");
    const double mu = q[1] / rho;
    const double nu = q[2] / rho;
    const double c = std::sqrt(gamma * p / rho);
    const double H = (q[3] + p) / rho;
    const double g1 = gamma - 1.0;
    const double ke = 0.5 * (mu * mu + nu * nu);
    const double phi2 = g1 * ke;
    const double ic2 = 1.0 / (c * c);
    // un: normal velocity, ut: tangential
    const double un = xdir ? mu : nu;
    const double ut = xdir ? nu : mu;
    // row index of normal/tangential momentum in the state vector
    const int in = xdir ? 1 : 2;
    const int it = xdir ? 2 : 1;

    auto Rat = [&](int r, int col) -> double& { return R[4 * r + col]; };
    auto Lat = [&](int r, int col) -> double& { return L[4 * r + col]; };

    // columns: un - c, entropy, shear, un + c
    Rat(0, 0) = 1.0;         Rat(0, 1) = 1.0; Rat(0, 2) = 0.0; Rat(0, 3) = 1.0;
    Rat(in, 0) = un - c;     Rat(in, 1) = un; Rat(in, 2) = 0.0; Rat(in, 3) = un + c;
    Rat(it, 0) = ut;         Rat(it, 1) = ut; Rat(it, 2) = 1.0; Rat(it, 3) = ut;
    Rat(3, 0) = H - un * c;  Rat(3, 1) = ke;  Rat(3, 2) = ut;  Rat(3, 3) = H + un * c;

    Lat(0, 0) = 0.5 * ic2 * (phi2 + un * c);
    Lat(0, in) = 0.5 * ic2 * (-g1 * un - c);
    Lat(0, it) = 0.5 * ic2 * (-g1 * ut);
    Lat(0, 3) = 0.5 * ic2 * g1;
    Lat(1, 0) = 1.0 - phi2 * ic2;
    Lat(1, in) = g1 * un * ic2;
    Lat(1, it) = g1 * ut * ic2;
    Lat(1, 3) = -g1 * ic2;
    Lat(2, 0) = -ut;
    Lat(2, in) = 0.0;
    Lat(2, it) = 1.0;
    Lat(2, 3) = 0.0;
    Lat(3, 0) = 0.5 * ic2 * (phi2 - un * c);
    Lat(3, in) = 0.5 * ic2 * (-g1 * un + c);
    Lat(3, it) = 0.5 * ic2 * (-g1 * ut);
    Lat(3, 3) = 0.5 * ic2 * g1;
  }
};

// Spectral-radius bound over a collection of states, alpha = max over states.
// States are packed contiguously, n_states of them, model.n_vars each.
template <class Model, class Speed>
inline double wavespeed_bound(const double* states, long n_states,
                              const Model&, Speed&& speed) {
  if (n_states <= 0)
    throw std::invalid_argument("wavespeed_bound: empty state collection");
  double a = 0.0;
  for (long k = 0; k < n_states; ++k)
    a = std::max(a, speed(states + k * Model::n_vars));
  return a;
}

}  // namespace hweno
