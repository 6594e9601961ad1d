#pragma once

#include <stdexcept>

namespace hweno {

// Uniform 1D mesh. Interior cells are indexed 0..n_cells-1; ghost cells extend
// n_ghost cells past each end.
struct Grid1 {
  int n_cells = 0;
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n_ghost = 2;

  Grid1() = default;
  Grid1(int n, double lo, double hi, int ghosts = 2)
      : n_cells(n), x_lo(lo), x_hi(hi), n_ghost(ghosts) {
    if (n_cells <= 0 || !(x_hi > x_lo))
      throw std::invalid_argument("Grid1: need n_cells > 0 and x_hi > x_lo");
    if (n_ghost < 2)
      throw std::invalid_argument("Grid1: n_ghost must be at least 2");
  }

  double dx() const { return (x_hi - x_lo) / n_cells; }
  double center(int i) const { return x_lo + (i + 0.5) * dx(); }
  double face(int i) const { return x_lo + i * dx(); }  // left face of cell i
};

// Uniform 2D mesh, same conventions per direction.
struct Grid2 {
  int nx = 0, ny = 0;
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  int n_ghost = 2;

  Grid2() = default;
  Grid2(int nx_, int ny_, double xlo, double xhi, double ylo, double yhi,
        int ghosts = 2)
      : nx(nx_), ny(ny_), x_lo(xlo), x_hi(xhi), y_lo(ylo), y_hi(yhi),
        n_ghost(ghosts) {
    if (nx <= 0 || ny <= 0 || !(x_hi > x_lo) || !(y_hi > y_lo))
      throw std::invalid_argument("Grid2: empty or inverted domain");
    if (n_ghost < 2)
      throw std::invalid_argument("Grid2: n_ghost must be at least 2");
  }

  double dx() const { return (x_hi - x_lo) / nx; }
  double dy() const { return (y_hi - y_lo) / ny; }
  double xc(int i) const { return x_lo + (i + 0.5) * dx(); }
  double yc(int j) const { return y_lo + (j + 0.5) * dy(); }
};

}  // namespace hweno
