#pragma once

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "hweno/integrator.hpp"
#include "hweno/io.hpp"
#include "hweno/problems.hpp"

namespace hweno {

struct RunConfig {
  std::string problem;
  std::vector<int> meshes;  // converge
  int nx = 0, ny = 0;       // run; 0 = problem default (also 1D cell count)
  SchemeConfig scheme{};
  double t_final = -1.0;  // override when > 0
  std::string out_dir;    // empty = no files written
};

struct ErrorNorms {
  double l1 = 0.0, linf = 0.0;
};

struct MeshResult {
  int n = 0, ny = 0;
  double l1 = 0.0, linf = 0.0;
  double order_l1 = 0.0, order_linf = 0.0;  // vs previous row
  double seconds = 0.0;
};

struct ConvergenceReport {
  std::string problem;
  std::vector<MeshResult> rows;
};

struct BenchmarkResult {
  double t_final = 0.0;
  long steps = 0;
  double mean_flag_fraction = 0.0;
  long positivity_violations = 0;
  long positivity_internal = 0;   // at the always-linear interior points
  long positivity_interface = 0;  // at the reconstructed edge traces
  double min_pressure = 0.0;      // smallest pressure seen at any point (2D)
  std::vector<std::pair<double, double>> flag_history;
};

// ---------------------------------------------------------------------------
// error norms against a known exact solution: cell averages of the exact
// solution by 5-point Gauss quadrature, L1 = mean |diff|, Linf = max |diff|.
// Deterministic serial summation.
// ---------------------------------------------------------------------------

template <class ExactFn>
inline ErrorNorms norms_vs_exact_1d(const MomentField1& U, const Grid1& g,
                                    ExactFn&& exact, double t, int var,
                                    int n_vars) {
  const QuadratureRule& q = gauss5();
  std::vector<double> val(n_vars);
  ErrorNorms e;
  double sum = 0.0;
  for (int i = 0; i < g.n_cells; ++i) {
    double avg = 0.0;
    for (int k = 0; k < q.n; ++k) {
      exact(g.center(i) + q.nodes[k] * g.dx(), t, val.data());
      avg += q.weights[k] * val[var];
    }
    const double d = std::abs(U.ubar(var, i) - avg);
    sum += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 = sum / g.n_cells;
  return e;
}

template <class ExactFn>
inline ErrorNorms norms_vs_exact_2d(const MomentField2& U, const Grid2& g,
                                    ExactFn&& exact, double t, int var,
                                    int n_vars) {
  const QuadratureRule& q = gauss5();
  std::vector<double> val(n_vars);
  ErrorNorms e;
  double sum = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double avg = 0.0;
      for (int ky = 0; ky < q.n; ++ky)
        for (int kx = 0; kx < q.n; ++kx) {
          exact(g.xc(i) + q.nodes[kx] * g.dx(),
                g.yc(j) + q.nodes[ky] * g.dy(), t, val.data());
          avg += q.weights[kx] * q.weights[ky] * val[var];
        }
      const double d = std::abs(U.ubar(var, i, j) - avg);
      sum += d;
      e.linf = std::max(e.linf, d);
    }
  e.l1 = sum / (static_cast<double>(g.nx) * g.ny);
  return e;
}

// Restriction of a finer-mesh solution to a coarser one by block averaging;
// both must cover the same interval and the ratio must be integral.
inline ErrorNorms compare_to_reference(const Solution1& sol,
                                       const Solution1& ref, int var = 0) {
  const double tol = 1e-9 * (std::abs(sol.x_hi - sol.x_lo) + 1.0);
  if (std::abs(sol.x_lo - ref.x_lo) > tol ||
      std::abs(sol.x_hi - ref.x_hi) > tol)
    throw std::invalid_argument("compare_to_reference: domain mismatch");
  if (ref.n_cells % sol.n_cells != 0)
    throw std::invalid_argument(
        "compare_to_reference: reference mesh is not a refinement");
  const int r = ref.n_cells / sol.n_cells;
  ErrorNorms e;
  double sum = 0.0;
  for (int i = 0; i < sol.n_cells; ++i) {
    double avg = 0.0;
    for (int k = 0; k < r; ++k) avg += ref.u(var, i * r + k);
    avg /= r;
    const double d = std::abs(sol.u(var, i) - avg);
    sum += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 = sum / sol.n_cells;
  return e;
}

// ---------------------------------------------------------------------------
// solver drivers
// ---------------------------------------------------------------------------

namespace detail_harness {

template <class F>
auto with_model1(ModelKind kind, F&& f) {
  if (kind == ModelKind::burgers) {
    Burgers1D m;
    return f(m);
  }
  Euler1D m;
  return f(m);
}

template <class F>
auto with_model2(ModelKind kind, F&& f) {
  if (kind == ModelKind::burgers) {
    Burgers2D m;
    return f(m);
  }
  Euler2D m;
  return f(m);
}

inline double order_between(double e_coarse, double e_fine, double n_coarse,
                            double n_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return 0.0;
  return std::log(e_coarse / e_fine) / std::log(n_fine / n_coarse);
}

}  // namespace detail_harness

// Accuracy study over a mesh sequence; the problem must carry an exact
// solution. Orders are ratio-based between consecutive rows, so non-doubling
// sequences work.
inline ConvergenceReport run_convergence(const RunConfig& cfg) {
  const ProblemInfo& info = find_problem(cfg.problem);
  if (cfg.meshes.empty())
    throw std::invalid_argument("run_convergence: no meshes given");
  ConvergenceReport rep;
  rep.problem = cfg.problem;

  for (std::size_t k = 0; k < cfg.meshes.size(); ++k) {
    const int n = cfg.meshes[k];
    MeshResult row;
    row.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    ErrorNorms e;
    if (info.dim == 1) {
      Problem1 p = make_problem1(cfg.problem);
      if (!p.exact)
        throw std::invalid_argument("run_convergence: no exact solution for " +
                                    cfg.problem);
      const double T = cfg.t_final > 0 ? cfg.t_final : p.t_final;
      e = detail_harness::with_model1(p.model, [&](auto model) {
        Solver1<decltype(model)> solver(Grid1(n, p.x_lo, p.x_hi), p.bc, model,
                                        cfg.scheme);
        solver.init([&](double x, double* u) { p.init(x, u); });
        solver.run_to(T);
        return norms_vs_exact_1d(solver.field(), solver.grid(), p.exact, T, 0,
                                 decltype(model)::n_vars);
      });
    } else {
      Problem2 p = make_problem2(cfg.problem);
      if (!p.exact)
        throw std::invalid_argument("run_convergence: no exact solution for " +
                                    cfg.problem);
      const double T = cfg.t_final > 0 ? cfg.t_final : p.t_final;
      row.ny = n;
      e = detail_harness::with_model2(p.model, [&](auto model) {
        Solver2<decltype(model)> solver(
            Grid2(n, n, p.x_lo, p.x_hi, p.y_lo, p.y_hi), p.bc, model,
            cfg.scheme);
        solver.init([&](double x, double y, double* u) { p.init(x, y, u); });
        solver.run_to(T);
        return norms_vs_exact_2d(solver.field(), solver.grid(), p.exact, T, 0,
                                 decltype(model)::n_vars);
      });
    }
    row.l1 = e.l1;
    row.linf = e.linf;
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (k > 0) {
      row.order_l1 = detail_harness::order_between(
          rep.rows.back().l1, row.l1, rep.rows.back().n, n);
      row.order_linf = detail_harness::order_between(
          rep.rows.back().linf, row.linf, rep.rows.back().n, n);
    }
    rep.rows.push_back(row);
  }
  return rep;
}

inline std::string convergence_table_text(const ConvergenceReport& rep,
                                          bool with_times = false) {
  std::ostringstream os;
  os << "# problem " << rep.problem << "\n";
  os << "# N  L1_error  L1_order  Linf_error  Linf_order";
  if (with_times) os << "  seconds";
  os << "\n";
  char buf[160];
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const MeshResult& r = rep.rows[k];
    if (k == 0)
      std::snprintf(buf, sizeof buf, "%6d  %.3E  %5s  %.3E  %5s", r.n, r.l1,
                    "-", r.linf, "-");
    else
      std::snprintf(buf, sizeof buf, "%6d  %.3E  %5.2f  %.3E  %5.2f", r.n,
                    r.l1, r.order_l1, r.linf, r.order_linf);
    os << buf;
    if (with_times) {
      std::snprintf(buf, sizeof buf, "  %.2f", r.seconds);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

// Non-smooth benchmark run: final snapshot, troubled-cell history, contour
// level files for the contouring problems.
inline BenchmarkResult run_benchmark(const RunConfig& cfg) {
  const ProblemInfo& info = find_problem(cfg.problem);
  BenchmarkResult out;
  if (info.dim == 1) {
    Problem1 p = make_problem1(cfg.problem);
    const double T = cfg.t_final > 0 ? cfg.t_final : p.t_final;
    const int n = cfg.nx > 0 ? cfg.nx : p.default_cells;
    detail_harness::with_model1(p.model, [&](auto model) {
      Solver1<decltype(model)> solver(Grid1(n, p.x_lo, p.x_hi), p.bc, model,
                                      cfg.scheme);
      solver.init([&](double x, double* u) { p.init(x, u); });
      solver.run_to(T);
      out.t_final = solver.time();
      out.steps = solver.steps();
      out.mean_flag_fraction = solver.mean_flag_fraction();
      out.positivity_violations = solver.positivity_violations();
      out.flag_history = solver.flag_history();
      if (!cfg.out_dir.empty()) {
        write_solution1(cfg.out_dir + "/" + cfg.problem + "_solution.dat",
                        solver.grid(), solver.field(), solver.trouble(),
                        solver.time(), cfg.problem);
        write_flag_history(cfg.out_dir + "/" + cfg.problem + "_flags.dat",
                           solver.flag_history());
      }
      return 0;
    });
  } else {
    Problem2 p = make_problem2(cfg.problem);
    const double T = cfg.t_final > 0 ? cfg.t_final : p.t_final;
    const int nx = cfg.nx > 0 ? cfg.nx : p.default_nx;
    const int ny = cfg.ny > 0 ? cfg.ny : p.default_ny;
    detail_harness::with_model2(p.model, [&](auto model) {
      Solver2<decltype(model)> solver(
          Grid2(nx, ny, p.x_lo, p.x_hi, p.y_lo, p.y_hi), p.bc, model,
          cfg.scheme);
      solver.init([&](double x, double y, double* u) { p.init(x, y, u); });
      solver.run_to(T);
      out.t_final = solver.time();
      out.steps = solver.steps();
      out.mean_flag_fraction = solver.mean_flag_fraction();
      out.positivity_violations = solver.positivity_violations();
      out.positivity_internal = solver.positivity_violations_internal();
      out.positivity_interface = solver.positivity_violations_interface();
      out.min_pressure = solver.min_pressure_seen();
      out.flag_history = solver.flag_history();
      if (!cfg.out_dir.empty()) {
        write_solution2(cfg.out_dir + "/" + cfg.problem + "_solution.dat",
                        solver.grid(), solver.field(), solver.trouble(),
                        &solver.fluid_mask(), solver.time(), cfg.problem);
        write_flag_history(cfg.out_dir + "/" + cfg.problem + "_flags.dat",
                           solver.flag_history());
        if (cfg.problem == "dmr")
          write_contour_levels(cfg.out_dir + "/dmr_contours.dat", 1.5, 22.7,
                               30);
        if (cfg.problem == "forward-step")
          write_contour_levels(cfg.out_dir + "/forward-step_contours.dat",
                               0.32, 6.15, 30);
      }
      return 0;
    });
  }
  return out;
}

}  // namespace hweno
