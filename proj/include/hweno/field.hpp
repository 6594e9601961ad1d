#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hweno/grid.hpp"
#include "hweno/quadrature.hpp"

namespace hweno {

// Per-cell zeroth and first moments for all conserved variables, ghost cells
// included. First moments use the cell-width-normalized weight (x - x_i)/dx.
struct MomentField1 {
  int n_vars = 0, n_cells = 0, n_ghost = 0, stride = 0;
  std::vector<double> ub, vb;  // [var * stride + cell], cell offset by n_ghost

  MomentField1() = default;
  MomentField1(int nv, const Grid1& g)
      : n_vars(nv), n_cells(g.n_cells), n_ghost(g.n_ghost),
        stride(g.n_cells + 2 * g.n_ghost),
        ub(static_cast<std::size_t>(nv) * stride, 0.0),
        vb(static_cast<std::size_t>(nv) * stride, 0.0) {}

  int idx(int m, int i) const { return m * stride + i + n_ghost; }
  double& ubar(int m, int i) { return ub[idx(m, i)]; }
  double ubar(int m, int i) const { return ub[idx(m, i)]; }
  double& vbar(int m, int i) { return vb[idx(m, i)]; }
  double vbar(int m, int i) const { return vb[idx(m, i)]; }

  bool all_finite() const {
    for (double x : ub)
      if (!std::isfinite(x)) return false;
    for (double x : vb)
      if (!std::isfinite(x)) return false;
    return true;
  }

  // first offending interior cell, for diagnostics
  bool find_nonfinite(int& var, int& cell) const {
    for (int m = 0; m < n_vars; ++m)
      for (int i = 0; i < n_cells; ++i)
        if (!std::isfinite(ubar(m, i)) || !std::isfinite(vbar(m, i))) {
          var = m;
          cell = i;
          return true;
        }
    return false;
  }
};

// 2D moment field: zeroth moment plus first moments in x (vb) and y (wb).
struct MomentField2 {
  int n_vars = 0, nx = 0, ny = 0, n_ghost = 0, sx = 0, sy = 0;
  std::vector<double> ub, vb, wb;

  MomentField2() = default;
  MomentField2(int nv, const Grid2& g)
      : n_vars(nv), nx(g.nx), ny(g.ny), n_ghost(g.n_ghost),
        sx(g.nx + 2 * g.n_ghost), sy(g.ny + 2 * g.n_ghost),
        ub(static_cast<std::size_t>(nv) * sx * sy, 0.0),
        vb(static_cast<std::size_t>(nv) * sx * sy, 0.0),
        wb(static_cast<std::size_t>(nv) * sx * sy, 0.0) {}

  std::size_t idx(int m, int i, int j) const {
    return (static_cast<std::size_t>(m) * sy + (j + n_ghost)) * sx +
           (i + n_ghost);
  }
  double& ubar(int m, int i, int j) { return ub[idx(m, i, j)]; }
  double ubar(int m, int i, int j) const { return ub[idx(m, i, j)]; }
  double& vbar(int m, int i, int j) { return vb[idx(m, i, j)]; }
  double vbar(int m, int i, int j) const { return vb[idx(m, i, j)]; }
  double& wbar(int m, int i, int j) { return wb[idx(m, i, j)]; }
  double wbar(int m, int i, int j) const { return wb[idx(m, i, j)]; }

  bool all_finite() const {
    for (double x : ub)
      if (!std::isfinite(x)) return false;
    for (double x : vb)
      if (!std::isfinite(x)) return false;
    for (double x : wb)
      if (!std::isfinite(x)) return false;
    return true;
  }

  bool find_nonfinite(int& var, int& ci, int& cj) const {
    for (int m = 0; m < n_vars; ++m)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
          if (!std::isfinite(ubar(m, i, j)) || !std::isfinite(vbar(m, i, j)) ||
              !std::isfinite(wbar(m, i, j))) {
            var = m;
            ci = i;
            cj = j;
            return true;
          }
    return false;
  }
};

// Interior moments from a pointwise initial condition u0(x, out[n_vars]),
// integrated per cell with 5-point Gauss-Legendre (exact through degree 9).
template <class F>
inline void init_moments(MomentField1& f, const Grid1& g, F&& u0) {
  const QuadratureRule& q = gauss5();
  const double dx = g.dx();
  std::vector<double> val(f.n_vars);
  for (int i = 0; i < g.n_cells; ++i) {
    const double xc = g.center(i);
    for (int m = 0; m < f.n_vars; ++m) {
      f.ubar(m, i) = 0.0;
      f.vbar(m, i) = 0.0;
    }
    for (int k = 0; k < q.n; ++k) {
      u0(xc + q.nodes[k] * dx, val.data());
      for (int m = 0; m < f.n_vars; ++m) {
        f.ubar(m, i) += q.weights[k] * val[m];
        f.vbar(m, i) += q.weights[k] * q.nodes[k] * val[m];
      }
    }
  }
}

// 2D version, tensor-product quadrature per cell.
template <class F>
inline void init_moments(MomentField2& f, const Grid2& g, F&& u0) {
  const QuadratureRule& q = gauss5();
  const double dx = g.dx(), dy = g.dy();
  std::vector<double> val(f.n_vars);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double xc = g.xc(i), yc = g.yc(j);
      for (int m = 0; m < f.n_vars; ++m) {
        f.ubar(m, i, j) = 0.0;
        f.vbar(m, i, j) = 0.0;
        f.wbar(m, i, j) = 0.0;
      }
      for (int ky = 0; ky < q.n; ++ky) {
        for (int kx = 0; kx < q.n; ++kx) {
          const double w = q.weights[kx] * q.weights[ky];
          u0(xc + q.nodes[kx] * dx, yc + q.nodes[ky] * dy, val.data());
          for (int m = 0; m < f.n_vars; ++m) {
            f.ubar(m, i, j) += w * val[m];
            f.vbar(m, i, j) += w * q.nodes[kx] * val[m];
            f.wbar(m, i, j) += w * q.nodes[ky] * val[m];
          }
        }
      }
    }
  }
}

}  // namespace hweno
