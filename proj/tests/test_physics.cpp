#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>

#include "hweno/equations.hpp"

using namespace hweno;

namespace {

// finite-difference directional Jacobian: A(u) v ~ (f(u+e v) - f(u-e v))/(2e)
template <int N, class FluxFn>
std::array<double, N> fd_jacobian_apply(const double* q, const double* v,
                                        FluxFn&& flux) {
  const double e = 1e-7;
  double qp[N], qm[N], fp[N], fm[N];
  for (int m = 0; m < N; ++m) {
    qp[m] = q[m] + e * v[m];
    qm[m] = q[m] - e * v[m];
  }
  flux(qp, fp);
  flux(qm, fm);
  std::array<double, N> out;
  for (int m = 0; m < N; ++m) out[m] = (fp[m] - fm[m]) / (2 * e);
  return out;
}

}  // namespace

TEST_CASE("Lax-Friedrichs flux: consistency and direct evaluation") {
  Burgers1D b;
  double um = 1.0, up = 1.0, out = 0.0;
  lax_friedrichs<1>(&um, &up, 1.0,
                    [&](const double* u, double* f) { b.flux(u, f); }, &out);
  CHECK(out == Catch::Approx(0.5).margin(1e-15));

  um = 0.0;
  up = 2.0;
  lax_friedrichs<1>(&um, &up, 2.0,
                    [&](const double* u, double* f) { b.flux(u, f); }, &out);
  CHECK(out == Catch::Approx(-1.0).margin(1e-15));
}

TEST_CASE("Lax-Friedrichs flux: Euler consistency against the pressure oracle") {
  Euler1D e;
  // oracle: p = (gamma-1)(E - rho mu^2/2) = 0.4 * (2.5 - 0.5) = 0.8,
  // flux = (rho mu, rho mu^2 + p, mu (E + p)) = (1, 1.8, 3.3)
  const double q[3] = {1.0, 1.0, 2.5};
  CHECK(e.pressure(q) == Catch::Approx(0.8).margin(1e-15));
  double out[3];
  lax_friedrichs<3>(q, q, 2.0,
                    [&](const double* u, double* f) { e.flux(u, f); }, out);
  CHECK(out[0] == Catch::Approx(1.0).margin(1e-14));
  CHECK(out[1] == Catch::Approx(1.8).margin(1e-14));
  CHECK(out[2] == Catch::Approx(3.3).margin(1e-14));
}

TEST_CASE("LF flux is monotone for scalar problems") {
  Burgers1D b;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const double alpha = 2.5, h = 1e-6;
  for (int it = 0; it < 200; ++it) {
    double um = d(rng), up = d(rng), f0, fm, fp;
    auto flux = [&](const double* u, double* f) { b.flux(u, f); };
    double a = um + h, c = um - h;
    lax_friedrichs<1>(&a, &up, alpha, flux, &fp);
    lax_friedrichs<1>(&c, &up, alpha, flux, &fm);
    CHECK(fp - fm >= -1e-12);  // nondecreasing in u-
    a = up + h;
    c = up - h;
    lax_friedrichs<1>(&um, &a, alpha, flux, &fp);
    lax_friedrichs<1>(&um, &c, alpha, flux, &fm);
    CHECK(fp - fm <= 1e-12);  // nonincreasing in u+
    (void)f0;
  }
}

TEST_CASE("Euler 1D eigensystem: L R = I and eigendecomposition vs FD Jacobian") {
  Euler1D e;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dr(0.2, 3.0), du(-2.0, 2.0),
      dp(0.1, 5.0);
  for (int it = 0; it < 50; ++it) {
    const double rho = dr(rng), mu = du(rng), p = dp(rng);
    const double q[3] = {rho, rho * mu,
                         p / 0.4 + 0.5 * rho * mu * mu};
    double L[9], R[9];
    e.eigensystem(q, q, L, R);
    // L R = I to 1e-12
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += L[r * 3 + k] * R[k * 3 + c];
        CHECK(s == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-12));
      }
    // A R = R diag(lambda), lambda = mu - c, mu, mu + c
    const double c0 = e.sound_speed(q);
    const double lam[3] = {mu - c0, mu, mu + c0};
    for (int col = 0; col < 3; ++col) {
      double v[3] = {R[col], R[3 + col], R[6 + col]};
      auto Av = fd_jacobian_apply<3>(
          q, v, [&](const double* u, double* f) { e.flux(u, f); });
      for (int r = 0; r < 3; ++r)
        CHECK(Av[r] == Catch::Approx(lam[col] * v[r]).margin(2e-5));
    }
  }
}

TEST_CASE("Euler 1D eigenvalues at rest state are {-c, 0, c} with c = sqrt(1.4)") {
  Euler1D e;
  const double q[3] = {1.0, 0.0, 1.0 / 0.4};
  CHECK(e.sound_speed(q) == Catch::Approx(std::sqrt(1.4)).epsilon(1e-14));
}

TEST_CASE("characteristic round trip R(Lq) = q") {
  Euler1D e;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const double qavg[3] = {1.3, 0.4, 2.9};
  double L[9], R[9];
  e.eigensystem(qavg, qavg, L, R);
  for (int it = 0; it < 100; ++it) {
    double q[3] = {d(rng), d(rng), d(rng)}, w[3], back[3];
    for (int r = 0; r < 3; ++r) {
      w[r] = 0.0;
      for (int k = 0; k < 3; ++k) w[r] += L[r * 3 + k] * q[k];
    }
    for (int r = 0; r < 3; ++r) {
      back[r] = 0.0;
      for (int k = 0; k < 3; ++k) back[r] += R[r * 3 + k] * w[k];
      CHECK(back[r] == Catch::Approx(q[r]).margin(1e-12));
    }
  }
}

TEST_CASE("Euler 2D eigensystems: inverse pairs and FD Jacobian in both directions") {
  Euler2D e;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dr(0.3, 3.0), du(-1.5, 1.5),
      dp(0.2, 4.0);
  for (int it = 0; it < 30; ++it) {
    const double rho = dr(rng), mu = du(rng), nu = du(rng), p = dp(rng);
    const double q[4] = {rho, rho * mu, rho * nu,
                         p / 0.4 + 0.5 * rho * (mu * mu + nu * nu)};
    for (int dir = 0; dir < 2; ++dir) {
      double L[16], R[16];
      if (dir == 0)
        e.eigensystem_x(q, q, L, R);
      else
        e.eigensystem_y(q, q, L, R);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          double s = 0.0;
          for (int k = 0; k < 4; ++k) s += L[r * 4 + k] * R[k * 4 + c];
          CHECK(s == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-12));
        }
      const double c0 = e.sound_speed(q);
      const double un = dir == 0 ? mu : nu;
      const double lam[4] = {un - c0, un, un, un + c0};
      auto flux = [&](const double* u, double* f) {
        if (dir == 0)
          e.flux_x(u, f);
        else
          e.flux_y(u, f);
      };
      for (int col = 0; col < 4; ++col) {
        double v[4] = {R[col], R[4 + col], R[8 + col], R[12 + col]};
        auto Av = fd_jacobian_apply<4>(q, v, flux);
        for (int r = 0; r < 4; ++r)
          CHECK(Av[r] == Catch::Approx(lam[col] * v[r]).margin(5e-5));
      }
    }
  }
}

TEST_CASE("eigensystem rejects non-physical averaged states") {
  Euler1D e;
  double L[9], R[9];
  const double bad[3] = {1.0, 10.0, 1.0};  // negative pressure
  CHECK_THROWS_AS(e.eigensystem(bad, bad, L, R), std::runtime_error);
}

TEST_CASE("wavespeed bound over a state collection") {
  Burgers1D b;
  const double burgers_states[2] = {-0.5, 1.5};
  CHECK(wavespeed_bound(burgers_states, 2, b,
                        [&](const double* u) { return b.wavespeed(u); }) ==
        Catch::Approx(1.5));
  CHECK(wavespeed_bound(burgers_states, 1, b,
                        [&](const double* u) { return b.wavespeed(u); }) ==
        Catch::Approx(0.5));
  CHECK_THROWS_AS(
      wavespeed_bound(burgers_states, 0, b,
                      [&](const double* u) { return b.wavespeed(u); }),
      std::invalid_argument);

  Euler1D e;
  const double q[3] = {1.0, 1.0, 1.0 / 0.4 + 0.5};
  CHECK(e.wavespeed(q) == Catch::Approx(1.0 + std::sqrt(1.4)).epsilon(1e-13));
}
