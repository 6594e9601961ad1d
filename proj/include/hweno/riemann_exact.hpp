#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hweno/quadrature.hpp"

namespace hweno {

struct PrimState {
  double rho, u, p;
};

// Exact solution of the Riemann problem for the 1D Euler equations
// (two nonlinear waves around a contact; pressure root found by bisection
// to machine precision). Used as the reference oracle for shock tubes.
class ExactRiemann {
 public:
  ExactRiemann(const PrimState& l, const PrimState& r, double gamma = 1.4)
      : l_(l), r_(r), g_(gamma) {
    cl_ = std::sqrt(g_ * l_.p / l_.rho);
    cr_ = std::sqrt(g_ * r_.p / r_.rho);
    if (2.0 * (cl_ + cr_) / (g_ - 1.0) <= r_.u - l_.u)
      throw std::runtime_error("ExactRiemann: vacuum state");
    double lo = 1e-14, hi = std::max(l_.p, r_.p);
    while (f_total(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f_total(mid) < 0.0 ? lo : hi) = mid;
    }
    ps_ = 0.5 * (lo + hi);
    us_ = 0.5 * (l_.u + r_.u) + 0.5 * (f_side(ps_, r_, cr_) - f_side(ps_, l_, cl_));
    rsl_ = rho_star(ps_, l_);
    rsr_ = rho_star(ps_, r_);
  }

  double p_star() const { return ps_; }
  double u_star() const { return us_; }
  double rho_star_left() const { return rsl_; }
  double rho_star_right() const { return rsr_; }

  // self-similar solution at xi = x / t
  PrimState sample(double xi) const {
    const double g1 = g_ - 1.0;
    if (xi < us_) {
      if (ps_ > l_.p) {  // left shock
        const double sl =
            l_.u - cl_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps_ / l_.p +
                                   g1 / (2.0 * g_));
        return (xi < sl) ? l_ : PrimState{rsl_, us_, ps_};
      }
      const double head = l_.u - cl_;
      const double cst = cl_ * std::pow(ps_ / l_.p, g1 / (2.0 * g_));
      const double tail = us_ - cst;
      if (xi < head) return l_;
      if (xi > tail) return {rsl_, us_, ps_};
      const double u = 2.0 / (g_ + 1.0) * (cl_ + 0.5 * g1 * l_.u + xi);
      const double c = u - xi;
      return {l_.rho * std::pow(c / cl_, 2.0 / g1), u,
              l_.p * std::pow(c / cl_, 2.0 * g_ / g1)};
    }
    if (ps_ > r_.p) {  // right shock
      const double sr =
          r_.u + cr_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps_ / r_.p +
                                 g1 / (2.0 * g_));
      return (xi > sr) ? r_ : PrimState{rsr_, us_, ps_};
    }
    const double head = r_.u + cr_;
    const double cst = cr_ * std::pow(ps_ / r_.p, g1 / (2.0 * g_));
    const double tail = us_ + cst;
    if (xi > head) return r_;
    if (xi < tail) return {rsr_, us_, ps_};
    const double u = 2.0 / (g_ + 1.0) * (-cr_ + 0.5 * g1 * r_.u + xi);
    const double c = xi - u;
    return {r_.rho * std::pow(c / cr_, 2.0 / g1), u,
            r_.p * std::pow(c / cr_, 2.0 * g_ / g1)};
  }

  // wave speeds ordered left to right (fan head/tail collapse to the shock
  // speed for shock waves); used to split cells for exact averaging
  std::vector<double> wave_speeds() const {
    const double g1 = g_ - 1.0;
    std::vector<double> s;
    if (ps_ > l_.p) {
      const double sl = l_.u - cl_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps_ / l_.p + g1 / (2.0 * g_));
      s.push_back(sl);
    } else {
      s.push_back(l_.u - cl_);
      s.push_back(us_ - cl_ * std::pow(ps_ / l_.p, g1 / (2.0 * g_)));
    }
    s.push_back(us_);
    if (ps_ > r_.p) {
      s.push_back(r_.u + cr_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps_ / r_.p + g1 / (2.0 * g_)));
    } else {
      s.push_back(us_ + cr_ * std::pow(ps_ / r_.p, g1 / (2.0 * g_)));
      s.push_back(r_.u + cr_);
    }
    return s;
  }

  // exact cell average of the density over [xl, xr] at time t; the cell is
  // split at the wave positions so each piece is smooth (the fan density is
  // polynomial in x/t for gamma = 1.4, integrated exactly by Gauss-5)
  double density_cell_average(double xl, double xr, double t) const {
    if (t <= 0.0) {
      if (xr <= 0.0) return l_.rho;
      if (xl >= 0.0) return r_.rho;
      return (l_.rho * (0.0 - xl) + r_.rho * (xr - 0.0)) / (xr - xl);
    }
    std::vector<double> cuts{xl, xr};
    for (double s : wave_speeds()) {
      const double x = s * t;
      if (x > xl && x < xr) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    const QuadratureRule& q = gauss5();
    double acc = 0.0;
    for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
      const double a = cuts[seg], b = cuts[seg + 1];
      const double mid = 0.5 * (a + b), len = b - a;
      for (int k = 0; k < q.n; ++k)
        acc += len * q.weights[k] * sample((mid + q.nodes[k] * len) / t).rho;
    }
    return acc / (xr - xl);
  }

 private:
  double f_side(double p, const PrimState& s, double c) const {
    const double g1 = g_ - 1.0;
    if (p > s.p) {
      const double A = 2.0 / ((g_ + 1.0) * s.rho);
      const double B = g1 / (g_ + 1.0) * s.p;
      return (p - s.p) * std::sqrt(A / (p + B));
    }
    return 2.0 * c / g1 * (std::pow(p / s.p, g1 / (2.0 * g_)) - 1.0);
  }
  double f_total(double p) const {
    return f_side(p, l_, cl_) + f_side(p, r_, cr_) + (r_.u - l_.u);
  }
  double rho_star(double p, const PrimState& s) const {
    const double g1 = g_ - 1.0;
    if (p > s.p) {
      const double r = p / s.p;
      const double gr = (g_ + 1.0) / g1;
      return s.rho * (gr * r + 1.0) / (gr + r);
    }
    return s.rho * std::pow(p / s.p, 1.0 / g_);
  }

  PrimState l_, r_;
  double g_;
  double cl_ = 0, cr_ = 0, ps_ = 0, us_ = 0, rsl_ = 0, rsr_ = 0;
};

}  // namespace hweno
