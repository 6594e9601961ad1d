#pragma once

#include <cstdint>
#include <vector>

#include "hweno/boundary.hpp"
#include "hweno/field.hpp"
#include "hweno/grid.hpp"
#include "hweno/reconstruct1d.hpp"
#include "hweno/reconstruct2d.hpp"

namespace hweno {

enum class IndicatorMode { kxrcf, force_all, force_none };

struct IndicatorConfig {
  IndicatorMode mode = IndicatorMode::kxrcf;
  double threshold = 0.05;  // flag when I_K exceeds this
  double h_scale = 1.0;     // multiplies the cell width in the normalization
  double tiny_norm = 1e-13; // indicator left unset on vacuum-level fields
  // data degree k entering the h^((k+1)/2) normalization; with k = 0 the
  // boundary jumps are those of the cell averages, with k = 1 those of the
  // evolved degree-1 Hermite data
  int k = 0;
  // flag when all indicator variables exceed the threshold, not just one
  bool require_all = false;
  // normalize by the smallest own-boundary magnitude instead of the largest;
  // sharpens the response to strong one-sided gradients
  bool min_norm = false;
  // second gate on the jumps of the fifth-order reconstruction traces, which
  // are O(h^6) wherever the data is resolved: cells whose high-order jump
  // indicator stays below this are never flagged, so steep-but-smooth
  // features cannot trip the cell-average test. 0 disables the gate.
  double smooth_veto = 0.05;
};

struct TroubleMap1 {
  int n_cells = 0, n_ghost = 0;
  std::vector<std::uint8_t> flag, stencil;

  TroubleMap1() = default;
  explicit TroubleMap1(const Grid1& g)
      : n_cells(g.n_cells), n_ghost(g.n_ghost),
        flag(g.n_cells + 2 * g.n_ghost, 0),
        stencil(g.n_cells + 2 * g.n_ghost, 0) {}

  std::uint8_t& troubled_ref(int i) { return flag[i + n_ghost]; }
  bool troubled(int i) const { return flag[i + n_ghost] != 0; }
  bool stencil_troubled(int i) const { return stencil[i + n_ghost] != 0; }

  double flagged_fraction() const {
    long c = 0;
    for (int i = 0; i < n_cells; ++i) c += troubled(i);
    return n_cells ? static_cast<double>(c) / n_cells : 0.0;
  }

  // wrap flags into ghosts (periodic) and dilate by the stencil footprint
  void finalize(bool periodic) {
    const int n = n_cells, G = n_ghost;
    for (int k = 1; k <= G; ++k) {
      troubled_ref(-k) = periodic ? flag[n - k + G] : 0;
      troubled_ref(n - 1 + k) = periodic ? flag[k - 1 + G] : 0;
    }
    for (int i = -G + 1; i <= n + G - 2; ++i)
      stencil[i + G] = flag[i - 1 + G] | flag[i + G] | flag[i + 1 + G];
    stencil[0] = flag[0];
    stencil[n + 2 * G - 1] = flag[n + 2 * G - 1];
  }
};

struct TroubleMap2 {
  int nx = 0, ny = 0, n_ghost = 0, sx = 0;
  std::vector<std::uint8_t> flag, stencil;

  TroubleMap2() = default;
  explicit TroubleMap2(const Grid2& g)
      : nx(g.nx), ny(g.ny), n_ghost(g.n_ghost), sx(g.nx + 2 * g.n_ghost),
        flag(static_cast<std::size_t>(sx) * (g.ny + 2 * g.n_ghost), 0),
        stencil(static_cast<std::size_t>(sx) * (g.ny + 2 * g.n_ghost), 0) {}

  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(j + n_ghost) * sx + (i + n_ghost);
  }
  std::uint8_t& troubled_ref(int i, int j) { return flag[at(i, j)]; }
  bool troubled(int i, int j) const { return flag[at(i, j)] != 0; }
  bool stencil_troubled(int i, int j) const { return stencil[at(i, j)] != 0; }

  double flagged_fraction(const std::vector<std::uint8_t>* fluid = nullptr)
      const {
    long c = 0, tot = 0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        if (fluid && !(*fluid)[at(i, j)]) continue;
        ++tot;
        c += troubled(i, j);
      }
    return tot ? static_cast<double>(c) / tot : 0.0;
  }

  void finalize(bool periodic_x, bool periodic_y) {
    const int G = n_ghost;
    if (periodic_x)
      for (int j = 0; j < ny; ++j)
        for (int k = 1; k <= G; ++k) {
          troubled_ref(-k, j) = flag[at(nx - k, j)];
          troubled_ref(nx - 1 + k, j) = flag[at(k - 1, j)];
        }
    if (periodic_y)
      for (int i = -G; i < nx + G; ++i)
        for (int k = 1; k <= G; ++k) {
          troubled_ref(i, -k) = flag[at(i, ny - k)];
          troubled_ref(i, ny - 1 + k) = flag[at(i, k - 1)];
        }
    for (int j = -G + 1; j <= ny + G - 2; ++j)
      for (int i = -G + 1; i <= nx + G - 2; ++i) {
        std::uint8_t s = 0;
        for (int b = -1; b <= 1; ++b)
          for (int a = -1; a <= 1; ++a) s |= flag[at(i + a, j + b)];
        stencil[at(i, j)] = s;
      }
  }
};

// ---------------------------------------------------------------------------
// KXRCF discontinuity indicator, 1D.
//
// A cell is flagged when, for any indicator variable q,
//   |int_{dK-} (q_in - q_nb) ds| / (h^{(k+1)/2} |dK-| max|q_in|) > threshold,
// with k = 1 and dK- the inflow part of the boundary. Traces are those of the
// evolved degree-1 Hermite data, u_h = ubar + 12 vbar (x-x_i)/dx, so a jump
// is only visible to the cells straddling it and the flagged band stays
// narrow.
// ---------------------------------------------------------------------------

template <class Model>
inline TroubleMap1 kxrcf_flag(const MomentField1& f, const Grid1& g,
                              const Boundary1& bc, const Model& model,
                              const IndicatorConfig& cfg) {
  TroubleMap1 tm(g);
  if (cfg.mode == IndicatorMode::force_none) {
    tm.finalize(bc.periodic());
    return tm;
  }
  if (cfg.mode == IndicatorMode::force_all) {
    for (int i = 0; i < g.n_cells; ++i) tm.troubled_ref(i) = 1;
    tm.finalize(bc.periodic());
    return tm;
  }

  const int n = g.n_cells;
  constexpr int NI = Model::n_indicators;
  // traces of indicator components from inside each cell, cells -1..n
  const double slope = cfg.k >= 1 ? 6.0 : 0.0;
  std::vector<double> trL((n + 2) * NI), trR((n + 2) * NI);
  std::vector<double> hoL((n + 2) * NI), hoR((n + 2) * NI);
  const bool gate = cfg.smooth_veto > 0.0;
  for (int i = -1; i <= n; ++i) {
    for (int c = 0; c < NI; ++c) {
      const int m = Model::indicator_components[c];
      trL[(i + 1) * NI + c] = f.ubar(m, i) - slope * f.vbar(m, i);
      trR[(i + 1) * NI + c] = f.ubar(m, i) + slope * f.vbar(m, i);
      if (gate) {
        const Stencil1 st{f.ubar(m, i - 1), f.ubar(m, i), f.ubar(m, i + 1),
                          f.vbar(m, i - 1), f.vbar(m, i), f.vbar(m, i + 1)};
        hoL[(i + 1) * NI + c] = linear_interface(st, Side::left);
        hoR[(i + 1) * NI + c] = linear_interface(st, Side::right);
      }
    }
  }

  const double h =
      std::pow(cfg.h_scale * g.dx(), 0.5 * (cfg.k + 1));
  double q[Model::n_vars];
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < Model::n_vars; ++m) q[m] = f.ubar(m, i);
    const double v = model.advective_speed(q);
    int hits = 0;
    for (int c = 0; c < NI; ++c) {
      double num = 0.0;
      int edges = 0;
      // inclusive inflow test: at stagnation (v = 0) both edges count, so
      // symmetric initial jumps are not invisible to the indicator
      if (v >= 0.0) {  // left boundary is inflow
        num += trL[(i + 1) * NI + c] - trR[(i - 1 + 1) * NI + c];
        ++edges;
      }
      if (v <= 0.0) {  // right boundary is inflow
        num += trR[(i + 1) * NI + c] - trL[(i + 1 + 1) * NI + c];
        ++edges;
      }
      if (edges == 0) continue;
      const double aL = std::abs(trL[(i + 1) * NI + c]);
      const double aR = std::abs(trR[(i + 1) * NI + c]);
      const double norm = cfg.min_norm ? std::min(aL, aR) : std::max(aL, aR);
      if (norm < cfg.tiny_norm) continue;
      if (std::abs(num) <= cfg.threshold * h * edges * norm) continue;
      if (gate) {
        // jumps of the high-degree traces at the same inflow edges
        double hnum = 0.0;
        if (v >= 0.0)
          hnum += hoL[(i + 1) * NI + c] - hoR[(i - 1 + 1) * NI + c];
        if (v <= 0.0)
          hnum += hoR[(i + 1) * NI + c] - hoL[(i + 1 + 1) * NI + c];
        if (std::abs(hnum) <= cfg.smooth_veto * g.dx() * edges * norm)
          continue;
      }
      ++hits;
      if (!cfg.require_all || hits == NI) {
        tm.troubled_ref(i) = 1;
        break;
      }
    }
  }
  tm.finalize(bc.periodic());
  return tm;
}

// 2D variant; edge integrals use the 3-point Gauss values of the evolved
// degree-1 data, the advective direction per cell comes from its zeroth
// moments. The kernel provides the high-order traces of the smooth-veto
// gate and is required whenever that gate is active.
template <class Model>
inline TroubleMap2 kxrcf_flag(const MomentField2& f, const Grid2& g,
                              const Boundary2& bc, const Model& model,
                              const IndicatorConfig& cfg,
                              const Kernel2* ker = nullptr,
                              const std::vector<std::uint8_t>* fluid = nullptr) {
  TroubleMap2 tm(g);
  if (cfg.mode == IndicatorMode::force_none) {
    tm.finalize(bc.periodic_x(), bc.periodic_y());
    return tm;
  }
  if (cfg.mode == IndicatorMode::force_all) {
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (!fluid || (*fluid)[tm.at(i, j)]) tm.troubled_ref(i, j) = 1;
    tm.finalize(bc.periodic_x(), bc.periodic_y());
    return tm;
  }

  const int nx = g.nx, ny = g.ny;
  constexpr int NI = Model::n_indicators;
  // 12 interface traces per cell and indicator variable, cells -1..nx x -1..ny
  const std::size_t ncell = static_cast<std::size_t>(nx + 2) * (ny + 2);
  std::vector<double> tr(ncell * 12 * NI);
  auto tat = [&](int i, int j, int p, int c) -> double& {
    return tr[((static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)) * 12 +
               p) * NI + c];
  };

  const bool gate = cfg.smooth_veto > 0.0;
  if (gate && !ker)
    throw std::invalid_argument(
        "kxrcf_flag 2d: the smooth-veto gate needs the reconstruction kernel");
  std::vector<double> ho(gate ? tr.size() : 0);
  auto hat = [&](int i, int j, int p, int c) -> double& {
    return ho[((static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)) * 12 +
               p) * NI + c];
  };

  const double gsn = std::sqrt(15.0) / 10.0;
  const double goff[3] = {-gsn, 0.0, gsn};
  const double slope = cfg.k >= 1 ? 12.0 : 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int j = -1; j <= ny; ++j) {
    StencilData2 z;
    for (int i = -1; i <= nx; ++i) {
      for (int c = 0; c < NI; ++c) {
        const int m = Model::indicator_components[c];
        const double u0 = f.ubar(m, i, j);
        const double vx = slope * f.vbar(m, i, j);
        const double wy = slope * f.wbar(m, i, j);
        for (int k = 0; k < 3; ++k) {
          tat(i, j, 0 * 3 + k, c) = u0 - 0.5 * vx + goff[k] * wy;  // W
          tat(i, j, 1 * 3 + k, c) = u0 + 0.5 * vx + goff[k] * wy;  // E
          tat(i, j, 2 * 3 + k, c) = u0 + goff[k] * vx - 0.5 * wy;  // S
          tat(i, j, 3 * 3 + k, c) = u0 + goff[k] * vx + 0.5 * wy;  // N
        }
        if (gate) {
          int s5 = 0;
          for (int b = -1; b <= 1; ++b)
            for (int a = -1; a <= 1; ++a) z.z[s5++] = f.ubar(m, i + a, j + b);
          z.z[9] = f.vbar(m, i, j - 1);
          z.z[10] = f.vbar(m, i - 1, j);
          z.z[11] = f.vbar(m, i, j);
          z.z[12] = f.vbar(m, i + 1, j);
          z.z[13] = f.vbar(m, i, j + 1);
          z.z[14] = f.wbar(m, i, j - 1);
          z.z[15] = f.wbar(m, i - 1, j);
          z.z[16] = f.wbar(m, i, j);
          z.z[17] = f.wbar(m, i + 1, j);
          z.z[18] = f.wbar(m, i, j + 1);
          for (int p = 0; p < 12; ++p)
            hat(i, j, p, c) = linear_point_2d(*ker, z, p);
        }
      }
    }
  }

  const double wq[3] = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
  const double dx = g.dx(), dy = g.dy();
  const double h =
      std::pow(cfg.h_scale * std::sqrt(dx * dy), 0.5 * (cfg.k + 1));

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int j = 0; j < ny; ++j) {
    double q[Model::n_vars];
    for (int i = 0; i < nx; ++i) {
      if (fluid && !(*fluid)[tm.at(i, j)]) continue;
      for (int m = 0; m < Model::n_vars; ++m) q[m] = f.ubar(m, i, j);
      const double vx = model.advective_speed_x(q);
      const double vy = model.advective_speed_y(q);
      int hits = 0;
      for (int c = 0; c < NI; ++c) {
        double num = 0.0, len = 0.0;
        if (vx >= 0.0) {  // west edge inflow, neighbor's east traces
          double s = 0.0;
          for (int k = 0; k < 3; ++k)
            s += wq[k] * (tat(i, j, 0 * 3 + k, c) - tat(i - 1, j, 1 * 3 + k, c));
          num += dy * s;
          len += dy;
        }
        if (vx <= 0.0) {  // east edge inflow
          double s = 0.0;
          for (int k = 0; k < 3; ++k)
            s += wq[k] * (tat(i, j, 1 * 3 + k, c) - tat(i + 1, j, 0 * 3 + k, c));
          num += dy * s;
          len += dy;
        }
        if (vy >= 0.0) {  // south edge inflow
          double s = 0.0;
          for (int k = 0; k < 3; ++k)
            s += wq[k] * (tat(i, j, 2 * 3 + k, c) - tat(i, j - 1, 3 * 3 + k, c));
          num += dx * s;
          len += dx;
        }
        if (vy <= 0.0) {  // north edge inflow
          double s = 0.0;
          for (int k = 0; k < 3; ++k)
            s += wq[k] * (tat(i, j, 3 * 3 + k, c) - tat(i, j + 1, 2 * 3 + k, c));
          num += dx * s;
          len += dx;
        }
        if (len == 0.0) continue;
        double norm = std::abs(tat(i, j, 0, c));
        for (int p = 1; p < 12; ++p) {
          const double a = std::abs(tat(i, j, p, c));
          norm = cfg.min_norm ? std::min(norm, a) : std::max(norm, a);
        }
        if (norm < cfg.tiny_norm) continue;
        if (std::abs(num) <= cfg.threshold * h * len * norm) continue;
        if (gate) {
          double hnum = 0.0;
          if (vx >= 0.0) {
            double s5 = 0.0;
            for (int k = 0; k < 3; ++k)
              s5 += wq[k] * (hat(i, j, 0 * 3 + k, c) - hat(i - 1, j, 1 * 3 + k, c));
            hnum += dy * s5;
          }
          if (vx <= 0.0) {
            double s5 = 0.0;
            for (int k = 0; k < 3; ++k)
              s5 += wq[k] * (hat(i, j, 1 * 3 + k, c) - hat(i + 1, j, 0 * 3 + k, c));
            hnum += dy * s5;
          }
          if (vy >= 0.0) {
            double s5 = 0.0;
            for (int k = 0; k < 3; ++k)
              s5 += wq[k] * (hat(i, j, 2 * 3 + k, c) - hat(i, j - 1, 3 * 3 + k, c));
            hnum += dx * s5;
          }
          if (vy <= 0.0) {
            double s5 = 0.0;
            for (int k = 0; k < 3; ++k)
              s5 += wq[k] * (hat(i, j, 3 * 3 + k, c) - hat(i, j + 1, 2 * 3 + k, c));
            hnum += dx * s5;
          }
          const double hveto =
              cfg.smooth_veto * std::sqrt(dx * dy) * len * norm;
          if (std::abs(hnum) <= hveto) continue;
        }
        ++hits;
        if (!cfg.require_all || hits == NI) {
          tm.troubled_ref(i, j) = 1;
          break;
        }
      }
    }
  }
  tm.finalize(bc.periodic_x(), bc.periodic_y());
  return tm;
}

}  // namespace hweno
