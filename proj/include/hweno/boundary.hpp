#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "hweno/field.hpp"
#include "hweno/grid.hpp"

namespace hweno {

enum class BcKind {
  periodic,
  reflective,
  outflow,    // zero-gradient, copies the nearest interior cell
  inflow,     // fixed conserved state, first moments zero
  dmr_bottom, // post-shock inflow before the wall start, reflective wall after
  dmr_top     // exact motion of the oblique Mach 10 shock
};

struct Boundary1 {
  BcKind left = BcKind::periodic;
  BcKind right = BcKind::periodic;
  std::array<double, 4> left_state{};
  std::array<double, 4> right_state{};

  bool periodic() const { return left == BcKind::periodic; }
  void validate() const {
    if ((left == BcKind::periodic) != (right == BcKind::periodic))
      throw std::invalid_argument("Boundary1: periodic sides must be paired");
    if (left == BcKind::dmr_bottom || left == BcKind::dmr_top ||
        right == BcKind::dmr_bottom || right == BcKind::dmr_top)
      throw std::invalid_argument("Boundary1: dmr kinds are 2D only");
  }
};

struct Boundary2 {
  BcKind x_lo = BcKind::periodic;
  BcKind x_hi = BcKind::periodic;
  BcKind y_lo = BcKind::periodic;
  BcKind y_hi = BcKind::periodic;
  std::array<double, 4> x_lo_state{}, x_hi_state{};
  std::array<double, 4> y_lo_state{}, y_hi_state{};

  // double Mach reflection: wall starts at this x on the bottom boundary,
  // shock foot starts there at t = 0 inclined 60 degrees to the x axis.
  double dmr_wall_start = 1.0 / 6.0;
  std::array<double, 4> dmr_post{}, dmr_pre{};

  // forward-facing step: blocked rectangle [step_x, x_hi] x [y_lo, step_y]
  bool has_step = false;
  double step_x = 0.6, step_y = 0.2;

  bool periodic_x() const { return x_lo == BcKind::periodic; }
  bool periodic_y() const { return y_lo == BcKind::periodic; }
  void validate() const {
    if ((x_lo == BcKind::periodic) != (x_hi == BcKind::periodic) ||
        (y_lo == BcKind::periodic) != (y_hi == BcKind::periodic))
      throw std::invalid_argument("Boundary2: periodic sides must be paired");
    if (x_lo == BcKind::dmr_bottom || x_lo == BcKind::dmr_top ||
        x_hi == BcKind::dmr_bottom || x_hi == BcKind::dmr_top ||
        y_lo == BcKind::dmr_top || y_hi == BcKind::dmr_bottom)
      throw std::invalid_argument("Boundary2: dmr kind on an unsupported side");
  }
};

// Shock-front x position of the 60-degree Mach 10 shock at height y, time t.
inline double dmr_shock_x(double wall_start, double y, double t) {
  static const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  return wall_start + (y + 20.0 * t) * inv_sqrt3;
}

// ---------------------------------------------------------------------------
// 1D ghost fill
// ---------------------------------------------------------------------------

template <class Model>
inline void fill_ghosts(MomentField1& f, const Grid1& g, const Boundary1& bc,
                        const Model& model, double /*t*/ = 0.0) {
  bc.validate();
  const int n = g.n_cells, G = g.n_ghost, nv = f.n_vars;
  const auto sign = model.reflect_sign();

  for (int k = 1; k <= G; ++k) {
    const int gl = -k, gr = n - 1 + k;
    switch (bc.left) {
      case BcKind::periodic:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gl) = f.ubar(m, n - k);
          f.vbar(m, gl) = f.vbar(m, n - k);
        }
        break;
      case BcKind::reflective:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gl) = sign[m] * f.ubar(m, k - 1);
          f.vbar(m, gl) = -sign[m] * f.vbar(m, k - 1);
        }
        break;
      case BcKind::outflow:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gl) = f.ubar(m, 0);
          f.vbar(m, gl) = f.vbar(m, 0);
        }
        break;
      case BcKind::inflow:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gl) = bc.left_state[m];
          f.vbar(m, gl) = 0.0;
        }
        break;
      default:
        throw std::invalid_argument("fill_ghosts 1d: unsupported kind");
    }
    switch (bc.right) {
      case BcKind::periodic:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gr) = f.ubar(m, k - 1);
          f.vbar(m, gr) = f.vbar(m, k - 1);
        }
        break;
      case BcKind::reflective:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gr) = sign[m] * f.ubar(m, n - k);
          f.vbar(m, gr) = -sign[m] * f.vbar(m, n - k);
        }
        break;
      case BcKind::outflow:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gr) = f.ubar(m, n - 1);
          f.vbar(m, gr) = f.vbar(m, n - 1);
        }
        break;
      case BcKind::inflow:
        for (int m = 0; m < nv; ++m) {
          f.ubar(m, gr) = bc.right_state[m];
          f.vbar(m, gr) = 0.0;
        }
        break;
      default:
        throw std::invalid_argument("fill_ghosts 1d: unsupported kind");
    }
  }
}

// ---------------------------------------------------------------------------
// 2D ghost fill
// ---------------------------------------------------------------------------

template <class Model>
inline void fill_ghosts(MomentField2& f, const Grid2& g, const Boundary2& bc,
                        const Model& model, double t = 0.0) {
  bc.validate();
  const int nx = g.nx, ny = g.ny, G = g.n_ghost, nv = f.n_vars;
  const auto sx = model.reflect_sign_x();
  const auto sy = model.reflect_sign_y();

  auto set_state = [&](int i, int j, const std::array<double, 4>& s) {
    for (int m = 0; m < nv; ++m) {
      f.ubar(m, i, j) = s[m];
      f.vbar(m, i, j) = 0.0;
      f.wbar(m, i, j) = 0.0;
    }
  };
  auto copy_cell = [&](int i, int j, int si, int sj) {
    for (int m = 0; m < nv; ++m) {
      f.ubar(m, i, j) = f.ubar(m, si, sj);
      f.vbar(m, i, j) = f.vbar(m, si, sj);
      f.wbar(m, i, j) = f.wbar(m, si, sj);
    }
  };
  auto mirror_x = [&](int i, int j, int si, int sj) {
    for (int m = 0; m < nv; ++m) {
      f.ubar(m, i, j) = sx[m] * f.ubar(m, si, sj);
      f.vbar(m, i, j) = -sx[m] * f.vbar(m, si, sj);
      f.wbar(m, i, j) = sx[m] * f.wbar(m, si, sj);
    }
  };
  auto mirror_y = [&](int i, int j, int si, int sj) {
    for (int m = 0; m < nv; ++m) {
      f.ubar(m, i, j) = sy[m] * f.ubar(m, si, sj);
      f.vbar(m, i, j) = sy[m] * f.vbar(m, si, sj);
      f.wbar(m, i, j) = -sy[m] * f.wbar(m, si, sj);
    }
  };

  // x sides over interior rows
  for (int j = 0; j < ny; ++j) {
    for (int k = 1; k <= G; ++k) {
      const int gl = -k, gr = nx - 1 + k;
      switch (bc.x_lo) {
        case BcKind::periodic: copy_cell(gl, j, nx - k, j); break;
        case BcKind::reflective: mirror_x(gl, j, k - 1, j); break;
        case BcKind::outflow: copy_cell(gl, j, 0, j); break;
        case BcKind::inflow: set_state(gl, j, bc.x_lo_state); break;
        default:
          throw std::invalid_argument("fill_ghosts 2d: bad x_lo kind");
      }
      switch (bc.x_hi) {
        case BcKind::periodic: copy_cell(gr, j, k - 1, j); break;
        case BcKind::reflective: mirror_x(gr, j, nx - k, j); break;
        case BcKind::outflow: copy_cell(gr, j, nx - 1, j); break;
        case BcKind::inflow: set_state(gr, j, bc.x_hi_state); break;
        default:
          throw std::invalid_argument("fill_ghosts 2d: bad x_hi kind");
      }
    }
  }

  // y sides over all columns (corners pick up the x fill)
  for (int i = -G; i < nx + G; ++i) {
    const double xci = g.xc(i);
    for (int k = 1; k <= G; ++k) {
      const int gb = -k, gt = ny - 1 + k;
      switch (bc.y_lo) {
        case BcKind::periodic: copy_cell(i, gb, i, ny - k); break;
        case BcKind::reflective: mirror_y(i, gb, i, k - 1); break;
        case BcKind::outflow: copy_cell(i, gb, i, 0); break;
        case BcKind::inflow: set_state(i, gb, bc.y_lo_state); break;
        case BcKind::dmr_bottom:
          if (xci < bc.dmr_wall_start)
            set_state(i, gb, bc.dmr_post);
          else
            mirror_y(i, gb, i, k - 1);
          break;
        default:
          throw std::invalid_argument("fill_ghosts 2d: bad y_lo kind");
      }
      switch (bc.y_hi) {
        case BcKind::periodic: copy_cell(i, gt, i, k - 1); break;
        case BcKind::reflective: mirror_y(i, gt, i, ny - k); break;
        case BcKind::outflow: copy_cell(i, gt, i, ny - 1); break;
        case BcKind::inflow: set_state(i, gt, bc.y_hi_state); break;
        case BcKind::dmr_top:
          if (xci < dmr_shock_x(bc.dmr_wall_start, g.yc(gt), t))
            set_state(i, gt, bc.dmr_post);
          else
            set_state(i, gt, bc.dmr_pre);
          break;
        default:
          throw std::invalid_argument("fill_ghosts 2d: bad y_hi kind");
      }
    }
  }

  // step walls: mirror into the blocked rectangle so wall-adjacent stencils
  // and fluxes see the reflected state
  if (bc.has_step) {
    const int iw = static_cast<int>(std::lround((bc.step_x - g.x_lo) / g.dx()));
    const int jw = static_cast<int>(std::lround((bc.step_y - g.y_lo) / g.dy()));
    // vertical wall face at x = step_x, fluid on the left
    for (int c = iw; c < iw + G; ++c)
      for (int j = -G; j < jw; ++j) mirror_x(c, j, 2 * iw - 1 - c, j);
    // horizontal wall face at y = step_y, fluid above; overwrites the corner
    for (int i = iw; i < nx + G; ++i)
      for (int r = jw - G; r < jw; ++r) mirror_y(i, r, i, 2 * jw - 1 - r);
  }
}

}  // namespace hweno
