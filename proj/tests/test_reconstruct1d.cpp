#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <random>

#include "hweno/quadrature.hpp"
#include "hweno/reconstruct1d.hpp"

using namespace hweno;

namespace {

// ---------------------------------------------------------------------------
// oracle: fit polynomials from their defining moment conditions by solving
// the small linear systems, evaluate them and their smoothness integrals
// numerically. Everything is in scaled coordinates (unit cells).
// ---------------------------------------------------------------------------

double mono_avg(int p, int cell) {  // (1/1) int_{cell-1/2}^{cell+1/2} t^p
  return (std::pow(cell + 0.5, p + 1) - std::pow(cell - 0.5, p + 1)) / (p + 1);
}
double mono_first(int p, int cell) {  // int t^p (t - cell)
  return mono_avg(p + 1, cell) - cell * mono_avg(p, cell);
}

struct Poly {
  Eigen::VectorXd c;  // coefficients of 1, x, x^2, ...
  double eval(double x) const {
    double v = 0.0, xp = 1.0;
    for (int k = 0; k < c.size(); ++k, xp *= x) v += c(k) * xp;
    return v;
  }
  Poly derivative() const {
    Poly d;
    if (c.size() <= 1) {
      d.c = Eigen::VectorXd::Zero(1);
      return d;
    }
    d.c = Eigen::VectorXd::Zero(c.size() - 1);
    for (int k = 1; k < c.size(); ++k) d.c(k - 1) = k * c(k);
    return d;
  }
  double cell_avg(int cell) const {
    double v = 0.0;
    for (int k = 0; k < c.size(); ++k) v += c(k) * mono_avg(k, cell);
    return v;
  }
  double cell_first(int cell) const {
    double v = 0.0;
    for (int k = 0; k < c.size(); ++k) v += c(k) * mono_first(k, cell);
    return v;
  }
};

struct Cond {
  int cell;
  bool first;  // false: zeroth moment, true: first moment
  double value;
};

Poly fit(const std::vector<Cond>& conds) {
  const int n = static_cast<int>(conds.size());
  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd b(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k)
      A(r, k) = conds[r].first ? mono_first(k, conds[r].cell)
                               : mono_avg(k, conds[r].cell);
    b(r) = conds[r].value;
  }
  Poly p;
  p.c = Eigen::FullPivLU<Eigen::MatrixXd>(A).solve(b);
  return p;
}

// Eq. (2.3)-style indicator: sum over derivative orders 1..r of the integral
// of the squared derivative over the center cell (scaled units), by
// high-order Gauss quadrature.
double beta_oracle(const Poly& p, int r) {
  static const double gx[6] = {-0.9324695142031521, -0.6612093864662645,
                               -0.2386191860831969, 0.2386191860831969,
                               0.6612093864662645,  0.9324695142031521};
  static const double gw[6] = {0.1713244923791704, 0.3607615730481386,
                               0.4679139345726910, 0.4679139345726910,
                               0.3607615730481386, 0.1713244923791704};
  double total = 0.0;
  Poly d = p;
  for (int a = 1; a <= r; ++a) {
    d = d.derivative();
    double s = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double x = 0.5 * gx[k];
      const double v = d.eval(x);
      s += 0.5 * gw[k] * v * v;
    }
    total += s;
  }
  return total;
}

Stencil1 random_stencil(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng), d(rng), 0.2 * d(rng), 0.2 * d(rng), 0.2 * d(rng)};
}

// scaled moments of a smooth function on the 3-cell stencil of cell size h
Stencil1 smooth_stencil(double (*f)(double), double xc, double h) {
  const QuadratureRule& q = gauss5();
  auto cellm = [&](int off, bool first) {
    double s = 0.0;
    for (int k = 0; k < q.n; ++k) {
      const double v = f(xc + off * h + q.nodes[k] * h);
      s += q.weights[k] * v * (first ? q.nodes[k] : 1.0);
    }
    return s;
  };
  return {cellm(-1, false), cellm(0, false), cellm(1, false),
          cellm(-1, true),  cellm(0, true),  cellm(1, true)};
}

double wave(double x) { return std::sin(2.0 * x) + 0.3 * std::cos(3.0 * x); }

}  // namespace

// ---------------------------------------------------------------------------
// re-derivation of every printed coefficient set from the moment conditions
// ---------------------------------------------------------------------------

TEST_CASE("moment-modification candidates match the fitted polynomials") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 25; ++it) {
    const Stencil1 s = random_stencil(rng);
    // quartic matching three cell averages and the outer first moments
    const Poly p0 = fit({{-1, false, s.um},
                         {0, false, s.u0},
                         {1, false, s.up},
                         {-1, true, s.vm},
                         {1, true, s.vp}});
    const Poly p1 = fit({{-1, false, s.um}, {0, false, s.u0}});
    const Poly p2 = fit({{0, false, s.u0}, {1, false, s.up}});
    const auto q = moment_candidates(s);
    CHECK(q[0] == Catch::Approx(p0.cell_first(0)).margin(1e-13));
    CHECK(q[1] == Catch::Approx(p1.cell_first(0)).margin(1e-14));
    CHECK(q[2] == Catch::Approx(p2.cell_first(0)).margin(1e-14));
  }
}

TEST_CASE("moment-modification smoothness indicators match the integral oracle") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 25; ++it) {
    const Stencil1 s = random_stencil(rng);
    const Poly p0 = fit({{-1, false, s.um},
                         {0, false, s.u0},
                         {1, false, s.up},
                         {-1, true, s.vm},
                         {1, true, s.vp}});
    const Poly p1 = fit({{-1, false, s.um}, {0, false, s.u0}});
    const Poly p2 = fit({{0, false, s.u0}, {1, false, s.up}});
    const auto beta = smoothness_1d_moment(s);
    CHECK(beta[0] == Catch::Approx(beta_oracle(p0, 4)).epsilon(1e-10).margin(1e-12));
    CHECK(beta[1] == Catch::Approx(beta_oracle(p1, 1)).epsilon(1e-12).margin(1e-13));
    CHECK(beta[2] == Catch::Approx(beta_oracle(p2, 1)).epsilon(1e-12).margin(1e-13));
  }
}

TEST_CASE("interface candidates, linear interface and internal values match the fitted polynomials") {
  std::mt19937_64 rng(3);
  const double s5 = std::sqrt(5.0);
  for (int it = 0; it < 25; ++it) {
    const Stencil1 s = random_stencil(rng);
    const Poly p0 = fit({{-1, false, s.um},
                         {0, false, s.u0},
                         {1, false, s.up},
                         {-1, true, s.vm},
                         {0, true, s.v0},
                         {1, true, s.vp}});
    const Poly p1 =
        fit({{-1, false, s.um}, {0, false, s.u0}, {0, true, s.v0}});
    const Poly p2 = fit({{0, false, s.u0}, {1, false, s.up}, {0, true, s.v0}});

    CHECK(linear_interface(s, Side::right) ==
          Catch::Approx(p0.eval(0.5)).margin(1e-12));
    CHECK(linear_interface(s, Side::left) ==
          Catch::Approx(p0.eval(-0.5)).margin(1e-12));
    const auto in = linear_internal(s);
    CHECK(in[0] == Catch::Approx(p0.eval(-s5 / 10.0)).margin(1e-12));
    CHECK(in[1] == Catch::Approx(p0.eval(s5 / 10.0)).margin(1e-12));

    // the three Step-2 candidates at the right interface, via a gamma that
    // collapses the combination onto each candidate is awkward; check the
    // smoothness indicators instead and the candidates through exactness
    const auto beta = smoothness_1d_interface(s);
    CHECK(beta[0] == Catch::Approx(beta_oracle(p0, 5)).epsilon(1e-10).margin(1e-12));
    CHECK(beta[1] == Catch::Approx(beta_oracle(p1, 2)).epsilon(1e-11).margin(1e-13));
    CHECK(beta[2] == Catch::Approx(beta_oracle(p2, 2)).epsilon(1e-11).margin(1e-13));
  }
}

TEST_CASE("printed interface formulas reproduce constants: coefficient sums") {
  // u-coefficients sum to one; with zero first moments any constant returns c
  const Stencil1 s{2.5, 2.5, 2.5, 0.0, 0.0, 0.0};
  CHECK(linear_interface(s, Side::right) == Catch::Approx(2.5).margin(1e-14));
  CHECK(linear_interface(s, Side::left) == Catch::Approx(2.5).margin(1e-14));
  const auto in = linear_internal(s);
  CHECK(in[0] == Catch::Approx(2.5).margin(1e-14));
  CHECK(in[1] == Catch::Approx(2.5).margin(1e-14));
}

// ---------------------------------------------------------------------------
// spec examples
// ---------------------------------------------------------------------------

TEST_CASE("modification: constant and linear data") {
  const Weights3 g = {0.98, 0.01, 0.01};
  const Stencil1 c{3.0, 3.0, 3.0, 0.0, 0.0, 0.0};
  CHECK(modify_first_moment(c, g) == Catch::Approx(0.0).margin(1e-15));

  const Stencil1 lin{-1.0, 0.0, 1.0, 1.0 / 12.0, 1.0 / 12.0, 1.0 / 12.0};
  for (const Weights3& gg :
       {Weights3{0.98, 0.01, 0.01}, Weights3{1. / 3, 1. / 3, 1. / 3},
        Weights3{0.2, 0.5, 0.3}})
    CHECK(modify_first_moment(lin, gg) ==
          Catch::Approx(1.0 / 12.0).margin(1e-14));

  const auto beta = smoothness_1d_moment(lin);
  CHECK(beta[1] == Catch::Approx(1.0).margin(1e-15));
  CHECK(beta[2] == Catch::Approx(1.0).margin(1e-15));
  CHECK(smoothness_1d_moment(c)[0] == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("modification converges at fifth order on smooth data") {
  const Weights3 g = {0.98, 0.01, 0.01};
  const double xc = 0.3;
  double prev_err = 0.0;
  for (int lev = 0; lev < 4; ++lev) {
    const double h = 0.1 / (1 << lev);
    Stencil1 s = smooth_stencil(&wave, xc, h);
    const double exact_v = s.v0;
    s.v0 = 12345.0;  // the modification must not depend on the old center moment
    const double err = std::abs(modify_first_moment(s, g) - exact_v);
    if (lev > 0) CHECK(err < prev_err / 24.0);  // ~2^5 with slack
    prev_err = err;
  }
}

TEST_CASE("interface HWENO: constants, linears, and mirror symmetry") {
  const Weights3 g = {0.98, 0.01, 0.01};
  const Stencil1 c{4.0, 4.0, 4.0, 0.0, 0.0, 0.0};
  CHECK(hweno_interface(c, Side::right, g) == Catch::Approx(4.0).margin(1e-14));
  CHECK(hweno_interface(c, Side::left, g) == Catch::Approx(4.0).margin(1e-14));

  const Stencil1 lin{-1.0, 0.0, 1.0, 1.0 / 12.0, 1.0 / 12.0, 1.0 / 12.0};
  for (const Weights3& gg :
       {Weights3{0.98, 0.01, 0.01}, Weights3{0.4, 0.35, 0.25}}) {
    CHECK(hweno_interface(lin, Side::right, gg) ==
          Catch::Approx(0.5).margin(1e-13));
    CHECK(hweno_interface(lin, Side::left, gg) ==
          Catch::Approx(-0.5).margin(1e-13));
  }
  CHECK(linear_interface(lin, Side::right) == Catch::Approx(0.5).margin(1e-14));

  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    const Stencil1 s = random_stencil(rng);
    CHECK(hweno_interface(s, Side::left, g) ==
          hweno_interface(mirrored(s), Side::right, g));
  }
}

TEST_CASE("interface HWENO is fifth-order accurate and gamma-independent") {
  const Weights3 ga = {0.98, 0.01, 0.01};
  const Weights3 gb = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const double xc = 0.7;
  double prev_err_a = 0, prev_err_b = 0, prev_diff = 0;
  for (int lev = 0; lev < 4; ++lev) {
    const double h = 0.1 / (1 << lev);
    const Stencil1 s = smooth_stencil(&wave, xc, h);
    const double exact = wave(xc + 0.5 * h);
    const double va = hweno_interface(s, Side::right, ga);
    const double vb = hweno_interface(s, Side::right, gb);
    const double ea = std::abs(va - exact), eb = std::abs(vb - exact);
    const double diff = std::abs(va - vb);
    if (lev > 0) {
      CHECK(ea < prev_err_a / 16.0);  // at least 4th order observed
      CHECK(eb < prev_err_b / 16.0);
      if (prev_diff > 1e-15) CHECK(diff < prev_diff / 16.0);
    }
    prev_err_a = ea;
    prev_err_b = eb;
    prev_diff = diff;
  }
}

TEST_CASE("linear interface and internal values are exact on high-degree data") {
  // quartic u(x) = x^4 has exact scaled moments; the big polynomial must
  // reproduce point values to roundoff
  auto quartic = [](double x) { return x * x * x * x; };
  const double h = 0.5, xc = 0.2;
  const QuadratureRule& q = gauss5();
  auto cellm = [&](int off, bool first) {
    double s = 0.0;
    for (int k = 0; k < q.n; ++k) {
      const double v = quartic(xc + off * h + q.nodes[k] * h);
      s += q.weights[k] * v * (first ? q.nodes[k] : 1.0);
    }
    return s;
  };
  const Stencil1 s{cellm(-1, false), cellm(0, false), cellm(1, false),
                   cellm(-1, true),  cellm(0, true),  cellm(1, true)};
  CHECK(linear_interface(s, Side::right) ==
        Catch::Approx(quartic(xc + 0.5 * h)).margin(1e-12));
  CHECK(linear_interface(s, Side::left) ==
        Catch::Approx(quartic(xc - 0.5 * h)).margin(1e-12));
  const auto in = linear_internal(s);
  const double s5 = std::sqrt(5.0);
  CHECK(in[0] == Catch::Approx(quartic(xc - s5 / 10.0 * h)).margin(1e-12));
  CHECK(in[1] == Catch::Approx(quartic(xc + s5 / 10.0 * h)).margin(1e-12));
}

TEST_CASE("nonlinear weights are a convex combination and recover gamma") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  const Weights3 g = {0.7, 0.2, 0.1};
  for (int it = 0; it < 200; ++it) {
    const std::array<double, 3> beta{d(rng), d(rng), d(rng)};
    const auto w = nonlinear_weights3(beta, g, 1e-6);
    CHECK(w[0] >= 0.0);
    CHECK(w[1] >= 0.0);
    CHECK(w[2] >= 0.0);
    CHECK(w[0] + w[1] + w[2] == Catch::Approx(1.0).margin(1e-12));
  }
  const auto w = nonlinear_weights3({2.0, 2.0, 2.0}, g, 1e-6);
  CHECK(w[0] == Catch::Approx(0.7).margin(1e-14));
  CHECK(w[1] == Catch::Approx(0.2).margin(1e-14));
  CHECK(w[2] == Catch::Approx(0.1).margin(1e-14));
}

TEST_CASE("degenerate stencils are rejected up front") {
  const Weights3 g = {0.98, 0.01, 0.01};
  Stencil1 s{1.0, std::nan(""), 1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(modify_first_moment(s, g), std::domain_error);
  CHECK_THROWS_AS(hweno_interface(s, Side::right, g), std::domain_error);
  CHECK_THROWS_AS(linear_interface(s, Side::left), std::domain_error);
}
