#pragma once

#include <cmath>
#include <stdexcept>

namespace hweno {

// Entropy solution of u_t + (u^2/2)_x = 0 with u0(x) = a + b sin(k x), b > 0.
// In the frame moving at speed a the solution is odd about the descending
// zero of the sine, so the single shock per period sits at x = pi/k + a t
// (mod 2 pi/k) once it forms at t = 1/(b k). Characteristic origins are
// found by bisection on the monotone branch.
class BurgersSineExact {
 public:
  BurgersSineExact(double a, double b, double k) : a_(a), b_(b), k_(k) {
    if (!(b_ > 0.0) || !(k_ > 0.0))
      throw std::invalid_argument("BurgersSineExact: need b > 0, k > 0");
  }

  double shock_time() const { return 1.0 / (b_ * k_); }
  double period() const { return 2.0 * M_PI / k_; }
  // principal shock position at time t (plus any multiple of the period)
  double shock_position(double t) const { return M_PI / k_ + a_ * t; }

  double value(double x, double t) const {
    if (t <= 0.0) return a_ + b_ * std::sin(k_ * x);
    const double L = period();
    const double xs = M_PI / k_;  // shock in the shifted frame
    double xi = x - a_ * t;
    // reduce relative to the shock into [-L/2, L/2)
    double d = xi - xs;
    d -= L * std::floor(d / L + 0.5);
    if (d >= 0.0) return 2.0 * a_ - value_left(-d, t);
    return value_left(d, t);
  }

  // value just left of the shock (the right value is 2a - this by symmetry)
  double left_state(double t) const { return value_left(-1e-300, t); }

 private:
  // d in [-L/2, 0): offset from the shock, shifted frame; returns u
  double value_left(double d, double t) const {
    const double xs = M_PI / k_;
    const double xi = xs + d;
    double ylo, yhi;
    if (b_ * k_ * t <= 1.0) {
      // pre-shock: x(y) = y + b sin(k y) t is globally monotone
      ylo = xi - b_ * t - 1e-12;
      yhi = xi + b_ * t + 1e-12;
    } else {
      // post-shock: origins live on the monotone branch [xs - L/2, y*]
      ylo = xs - 0.5 * period();
      yhi = std::acos(-1.0 / (b_ * k_ * t)) / k_;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (ylo + yhi);
      const double F = mid + b_ * std::sin(k_ * mid) * t - xi;
      (F < 0.0 ? ylo : yhi) = mid;
    }
    const double y = 0.5 * (ylo + yhi);
    return a_ + b_ * std::sin(k_ * y);
  }

  double a_, b_, k_;
};

}  // namespace hweno
