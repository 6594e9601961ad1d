#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hweno/boundary.hpp"
#include "hweno/equations.hpp"
#include "hweno/field.hpp"
#include "hweno/grid.hpp"
#include "hweno/indicator.hpp"
#include "hweno/quadrature.hpp"
#include "hweno/reconstruct1d.hpp"
#include "hweno/reconstruct2d.hpp"

namespace hweno {

enum class SchemeMode { hybrid, force_all_troubled, linear_only };
enum class DtMode { production, accuracy };
enum class GammaMode { paper_default, uniform, random_per_step };

struct SchemeConfig {
  SchemeMode mode = SchemeMode::hybrid;
  GammaMode gamma_mode = GammaMode::paper_default;
  double eps = kWenoEps;
  double cfl = 0.6;
  // accuracy-mode dt prefactor; the refinement studies use dt ~ dx^(5/3)
  double cfl_accuracy = 0.8;
  DtMode dt_mode = DtMode::production;
  std::uint64_t seed = 20250811;
  bool reflag_per_stage = true;
  bool alpha_per_stage = true;
  bool monitor_positivity = true;
  IndicatorConfig indicator{};
};

inline IndicatorMode indicator_mode_for(SchemeMode m) {
  switch (m) {
    case SchemeMode::hybrid: return IndicatorMode::kxrcf;
    case SchemeMode::force_all_troubled: return IndicatorMode::force_all;
    case SchemeMode::linear_only: return IndicatorMode::force_none;
  }
  return IndicatorMode::kxrcf;
}

inline Weights3 paper_gamma3() { return {0.98, 0.01, 0.01}; }
inline Weights5 paper_gamma5() { return {{0.96, 0.01, 0.01, 0.01, 0.01}}; }
inline Weights3 uniform_gamma3() {
  return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
}
inline Weights5 uniform_gamma5() { return {{0.2, 0.2, 0.2, 0.2, 0.2}}; }

// CFL time step. Accuracy mode scales dt ~ dx^(5/3) so the third-order time
// error tracks at (not above) the fifth-order spatial scale in refinement
// studies; halving dx scales dt by 2^(-5/3) in either form.
inline double compute_dt_1d(double alpha, double dx, double cfl, DtMode mode,
                            double remaining) {
  if (!(alpha > 0.0)) return remaining;
  const double dt = (mode == DtMode::accuracy)
                        ? cfl * std::pow(dx / alpha, 5.0 / 3.0)
                        : cfl * dx / alpha;
  return std::min(remaining, dt);
}

inline double compute_dt_2d(double ax, double ay, double dx, double dy,
                            double cfl, DtMode mode, double remaining) {
  const double ex = (mode == DtMode::accuracy) ? std::pow(dx, 5.0 / 3.0) : dx;
  const double ey = (mode == DtMode::accuracy) ? std::pow(dy, 5.0 / 3.0) : dy;
  const double denom = ax / ex + ay / ey;
  if (!(denom > 0.0)) return remaining;
  return std::min(remaining, cfl / denom);
}

// Generic three-stage TVD-RK3 update on a flat state vector,
//   u1 = u + dt L(u); u2 = 3/4 u + 1/4 u1 + 1/4 dt L(u1);
//   u  = 1/3 u + 2/3 u2 + 2/3 dt L(u2).
template <class Rhs>
inline void step_rk3(std::vector<double>& u, double t, double dt, Rhs&& rhs) {
  const std::size_t n = u.size();
  std::vector<double> u0 = u, k(n);
  rhs(u, t, k);
  for (std::size_t i = 0; i < n; ++i) u[i] = u0[i] + dt * k[i];
  rhs(u, t + dt, k);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = 0.75 * u0[i] + 0.25 * u[i] + 0.25 * dt * k[i];
  rhs(u, t + 0.5 * dt, k);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = u0[i] / 3.0 + (2.0 / 3.0) * (u[i] + dt * k[i]);
}

namespace detail_rk {

inline void lincomb(std::vector<double>& out, double a,
                    const std::vector<double>& x, double b,
                    const std::vector<double>& y, double c,
                    const std::vector<double>& z) {
  const std::size_t n = out.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < static_cast<long>(n); ++i)
    out[i] = a * x[i] + b * y[i] + c * z[i];
}

}  // namespace detail_rk

// ---------------------------------------------------------------------------
// 1D solver
// ---------------------------------------------------------------------------

template <class Model>
class Solver1 {
 public:
  static constexpr int NV = Model::n_vars;

  Solver1(const Grid1& grid, const Boundary1& bc, const Model& model,
          const SchemeConfig& cfg)
      : g_(grid), bc_(bc), model_(model), cfg_(cfg), U_(NV, grid),
        U0_(NV, grid), K_(NV, grid), tm_(grid), rng_(cfg.seed) {
    bc_.validate();
    ind_ = cfg_.indicator;
    ind_.mode = indicator_mode_for(cfg_.mode);
    const int sz = (g_.n_cells + 2) * NV;
    trL_.assign(sz, 0.0);
    trR_.assign(sz, 0.0);
    fhat_.assign((g_.n_cells + 1) * NV, 0.0);
    gamma3_ = paper_gamma3();
    if (cfg_.gamma_mode == GammaMode::uniform) gamma3_ = uniform_gamma3();
  }

  template <class F>
  void init(F&& u0) {
    init_moments(U_, g_, u0);
    t_ = 0.0;
    steps_ = 0;
    frac_sum_ = 0.0;
    flag_history_.clear();
  }

  double time() const { return t_; }
  const Grid1& grid() const { return g_; }
  const MomentField1& field() const { return U_; }
  MomentField1& field() { return U_; }
  const TroubleMap1& trouble() const { return tm_; }
  long steps() const { return steps_; }
  double mean_flag_fraction() const {
    return steps_ ? frac_sum_ / steps_ : 0.0;
  }
  const std::vector<std::pair<double, double>>& flag_history() const {
    return flag_history_;
  }
  long positivity_violations() const { return pos_viol_; }

  double suggest_dt(double remaining) const {
    double a = 0.0, q[NV];
    for (int i = 0; i < g_.n_cells; ++i) {
      for (int m = 0; m < NV; ++m) q[m] = U_.ubar(m, i);
      a = std::max(a, model_.wavespeed(q));
    }
    const double cfl = cfg_.dt_mode == DtMode::accuracy ? cfg_.cfl_accuracy
                                                        : cfg_.cfl;
    return compute_dt_1d(a, g_.dx(), cfl, cfg_.dt_mode, remaining);
  }

  void advance(double dt) {
    draw_gamma();
    prepare(U_, t_, true);
    flag_history_.emplace_back(t_, tm_.flagged_fraction());
    frac_sum_ += tm_.flagged_fraction();
    // the step anchors at the limited state, as in RKDG limiting
    U0_.ub = U_.ub;
    U0_.vb = U_.vb;
    eval_rhs(U_, K_);
    detail_rk::lincomb(U_.ub, 1.0, U0_.ub, 0.0, U0_.ub, dt, K_.ub);
    detail_rk::lincomb(U_.vb, 1.0, U0_.vb, 0.0, U0_.vb, dt, K_.vb);
    check_stage(1);

    prepare(U_, t_ + dt, cfg_.reflag_per_stage);
    eval_rhs(U_, K_);
    detail_rk::lincomb(U_.ub, 0.75, U0_.ub, 0.25, U_.ub, 0.25 * dt, K_.ub);
    detail_rk::lincomb(U_.vb, 0.75, U0_.vb, 0.25, U_.vb, 0.25 * dt, K_.vb);
    check_stage(2);

    prepare(U_, t_ + 0.5 * dt, cfg_.reflag_per_stage);
    eval_rhs(U_, K_);
    detail_rk::lincomb(U_.ub, 1.0 / 3.0, U0_.ub, 2.0 / 3.0, U_.ub,
                       2.0 / 3.0 * dt, K_.ub);
    detail_rk::lincomb(U_.vb, 1.0 / 3.0, U0_.vb, 2.0 / 3.0, U_.vb,
                       2.0 / 3.0 * dt, K_.vb);
    check_stage(3);

    t_ += dt;
    ++steps_;
  }

  // Run to final time with automatic dt; the remaining interval is divided
  // evenly so the last step is not a fraction-of-dt kink. Returns steps taken.
  long run_to(double t_final) {
    while (t_final - t_ > 1e-13 * std::max(1.0, t_final)) {
      const double remaining = t_final - t_;
      const double dt = suggest_dt(remaining);
      const long n = std::max(1L, static_cast<long>(
                                      std::ceil(remaining / dt - 1e-9)));
      advance(remaining / n);
    }
    return steps_;
  }

  // exposed for tests: one prepared RHS evaluation
  void rhs_for_test(MomentField1& field, double t, MomentField1& out) {
    prepare(field, t, true);
    eval_rhs(field, out);
  }

 private:
  void draw_gamma() {
    if (cfg_.gamma_mode != GammaMode::random_per_step) return;
    std::uniform_real_distribution<double> dist(0.01, 1.0);
    double a = dist(rng_), b = dist(rng_), c = dist(rng_);
    const double s = a + b + c;
    gamma3_ = {a / s, b / s, c / s};
  }

  void check_stage(int stage) const { check_finite_state(U_, stage); }

  void check_finite_state(const MomentField1& U, int stage) const {
    int m = 0, i = 0;
    if (U.find_nonfinite(m, i)) {
      std::ostringstream os;
      os << "Solver1: non-finite state (var " << m << ", cell " << i << ") ";
      if (stage > 0)
        os << "after RK stage " << stage;
      else
        os << "entering a stage";
      os << " at t=" << t_;
      throw std::runtime_error(os.str());
    }
  }

  Stencil1 gather(const MomentField1& U, int m, int i) const {
    return {U.ubar(m, i - 1), U.ubar(m, i), U.ubar(m, i + 1),
            U.vbar(m, i - 1), U.vbar(m, i), U.vbar(m, i + 1)};
  }

  void prepare(MomentField1& U, double t, bool reflag) {
    check_finite_state(U, 0);
    fill_ghosts(U, g_, bc_, model_, t);
    if (reflag) tm_ = kxrcf_flag(U, g_, bc_, model_, ind_);
    if (cfg_.mode != SchemeMode::linear_only) modify_troubled(U);
    fill_ghosts(U, g_, bc_, model_, t);
    if (cfg_.alpha_per_stage || !alpha_valid_) {
      alpha_ = interior_alpha(U);
      alpha_valid_ = true;
    }
  }

  double interior_alpha(const MomentField1& U) const {
    double a = 0.0, q[NV];
    for (int i = 0; i < g_.n_cells; ++i) {
      for (int m = 0; m < NV; ++m) q[m] = U.ubar(m, i);
      a = std::max(a, model_.wavespeed(q));
    }
    return a;
  }

  void modify_troubled(MomentField1& U) {
    mod_cells_.clear();
    mod_values_.clear();
    for (int i = 0; i < g_.n_cells; ++i) {
      if (!tm_.troubled(i)) continue;
      mod_cells_.push_back(i);
      if constexpr (!Model::is_system) {
        mod_values_.push_back(
            modify_first_moment(gather(U, 0, i), gamma3_, cfg_.eps));
      } else {
        double L[NV * NV], R[NV * NV], q[NV], vhat[NV];
        for (int m = 0; m < NV; ++m) q[m] = U.ubar(m, i);
        model_.eigensystem(q, q, L, R);
        for (int c = 0; c < NV; ++c) {
          Stencil1 s{};
          const double* Lr = L + c * NV;
          double um = 0, u0 = 0, up = 0, vm = 0, v0 = 0, vp = 0;
          for (int m = 0; m < NV; ++m) {
            um += Lr[m] * U.ubar(m, i - 1);
            u0 += Lr[m] * U.ubar(m, i);
            up += Lr[m] * U.ubar(m, i + 1);
            vm += Lr[m] * U.vbar(m, i - 1);
            v0 += Lr[m] * U.vbar(m, i);
            vp += Lr[m] * U.vbar(m, i + 1);
          }
          s = {um, u0, up, vm, v0, vp};
          vhat[c] = modify_first_moment(s, gamma3_, cfg_.eps);
        }
        for (int m = 0; m < NV; ++m) {
          double v = 0.0;
          for (int c = 0; c < NV; ++c) v += R[m * NV + c] * vhat[c];
          mod_values_.push_back(v);
        }
        continue;
      }
    }
    // apply buffered values (simultaneous update)
    std::size_t k = 0;
    for (int idx = 0; idx < static_cast<int>(mod_cells_.size()); ++idx) {
      const int i = mod_cells_[idx];
      if constexpr (!Model::is_system) {
        U.vbar(0, i) = mod_values_[k++];
      } else {
        for (int m = 0; m < NV; ++m) U.vbar(m, i) = mod_values_[k++];
      }
    }
  }

  double& trL(int i, int m) { return trL_[(i + 1) * NV + m]; }
  double& trR(int i, int m) { return trR_[(i + 1) * NV + m]; }

  void eval_rhs(const MomentField1& U, MomentField1& out) {
    const int n = g_.n_cells;
    const double dx = g_.dx();
    const bool lin_only = cfg_.mode == SchemeMode::linear_only;

    // interface traces from inside each cell; high-degree polynomial by
    // default, HWENO on cells whose stencil touches a troubled cell
    for (int i = -1; i <= n; ++i) {
      const bool tro = !lin_only && tm_.stencil_troubled(i);
      if (!tro) {
        for (int m = 0; m < NV; ++m) {
          const Stencil1 s = gather(U, m, i);
          trL(i, m) = linear_interface(s, Side::left);
          trR(i, m) = linear_interface(s, Side::right);
        }
      } else if constexpr (!Model::is_system) {
        const Stencil1 s = gather(U, 0, i);
        trL(i, 0) = hweno_interface(s, Side::left, gamma3_, cfg_.eps);
        trR(i, 0) = hweno_interface(s, Side::right, gamma3_, cfg_.eps);
      }
    }
    if constexpr (Model::is_system) {
      if (!lin_only) hweno_system_traces(U);
    }

    // non-finite trace scan with cell diagnostics
    for (int i = -1; i <= n; ++i)
      for (int m = 0; m < NV; ++m)
        if (!std::isfinite(trL(i, m)) || !std::isfinite(trR(i, m))) {
          std::ostringstream os;
          os << "rhs_1d: non-finite reconstruction at cell " << i << " var "
             << m << " t=" << t_;
          throw std::runtime_error(os.str());
        }

    // interface fluxes
    for (int fidx = 0; fidx <= n; ++fidx) {
      lax_friedrichs<NV>(
          &trR(fidx - 1, 0), &trL(fidx, 0), alpha_,
          [this](const double* q, double* f) { model_.flux(q, f); },
          &fhat_[fidx * NV]);
    }

    // cell updates
    long viol = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : viol)
#endif
    for (int i = 0; i < n; ++i) {
      double qa[NV], qb[NV], qc[NV], qd[NV];
      double fa[NV], fb[NV], fc[NV], fd[NV];
      for (int m = 0; m < NV; ++m) {
        const Stencil1 s = gather(U, m, i);
        const auto in = linear_internal(s);
        qa[m] = trL_[(i + 1) * NV + m];
        qb[m] = in[0];
        qc[m] = in[1];
        qd[m] = trR_[(i + 1) * NV + m];
      }
      if constexpr (Model::is_system) {
        if (cfg_.monitor_positivity) {
          for (const double* q : {qa, qb, qc, qd})
            if (!(q[0] > 0.0) || !(model_.pressure(q) > 0.0)) ++viol;
        }
      }
      model_.flux(qa, fa);
      model_.flux(qb, fb);
      model_.flux(qc, fc);
      model_.flux(qd, fd);
      const double* fl = &fhat_[i * NV];
      const double* fr = &fhat_[(i + 1) * NV];
      for (int m = 0; m < NV; ++m) {
        const double Fi =
            (fa[m] + fd[m]) / 12.0 + (5.0 / 12.0) * (fb[m] + fc[m]);
        out.ubar(m, i) = -(fr[m] - fl[m]) / dx;
        out.vbar(m, i) = -(fl[m] + fr[m]) / (2.0 * dx) + Fi / dx;
      }
    }
    pos_viol_ += viol;
  }

  void hweno_system_traces(const MomentField1& U) {
    const int n = g_.n_cells;
    for (int fidx = 0; fidx <= n; ++fidx) {
      const int il = fidx - 1, ir = fidx;
      const bool lt = tm_.stencil_troubled(il);
      const bool rt = tm_.stencil_troubled(ir);
      if (!lt && !rt) continue;
      double L[NV * NV], R[NV * NV], qa[NV], qb[NV];
      for (int m = 0; m < NV; ++m) {
        qa[m] = U.ubar(m, il);
        qb[m] = U.ubar(m, ir);
      }
      try {
        model_.eigensystem(qa, qb, L, R);
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << e.what() << " (interface " << fidx << ", t=" << t_ << ", left ";
        for (int m = 0; m < NV; ++m) os << qa[m] << " ";
        os << ", right ";
        for (int m = 0; m < NV; ++m) os << qb[m] << " ";
        os << ")";
        throw std::runtime_error(os.str());
      }
      auto project_cell = [&](int i, int c) -> Stencil1 {
        const double* Lr = L + c * NV;
        double um = 0, u0 = 0, up = 0, vm = 0, v0 = 0, vp = 0;
        for (int m = 0; m < NV; ++m) {
          um += Lr[m] * U.ubar(m, i - 1);
          u0 += Lr[m] * U.ubar(m, i);
          up += Lr[m] * U.ubar(m, i + 1);
          vm += Lr[m] * U.vbar(m, i - 1);
          v0 += Lr[m] * U.vbar(m, i);
          vp += Lr[m] * U.vbar(m, i + 1);
        }
        return {um, u0, up, vm, v0, vp};
      };
      if (lt) {
        double vhat[NV];
        for (int c = 0; c < NV; ++c)
          vhat[c] = hweno_interface(project_cell(il, c), Side::right, gamma3_,
                                    cfg_.eps);
        for (int m = 0; m < NV; ++m) {
          double v = 0.0;
          for (int c = 0; c < NV; ++c) v += R[m * NV + c] * vhat[c];
          trR(il, m) = v;
        }
      }
      if (rt) {
        double vhat[NV];
        for (int c = 0; c < NV; ++c)
          vhat[c] = hweno_interface(project_cell(ir, c), Side::left, gamma3_,
                                    cfg_.eps);
        for (int m = 0; m < NV; ++m) {
          double v = 0.0;
          for (int c = 0; c < NV; ++c) v += R[m * NV + c] * vhat[c];
          trL(ir, m) = v;
        }
      }
    }
  }

  Grid1 g_;
  Boundary1 bc_;
  Model model_;
  SchemeConfig cfg_;
  IndicatorConfig ind_;
  MomentField1 U_, U0_, K_;
  TroubleMap1 tm_;
  std::mt19937_64 rng_;
  Weights3 gamma3_{0.98, 0.01, 0.01};
  std::vector<double> trL_, trR_, fhat_;
  std::vector<int> mod_cells_;
  std::vector<double> mod_values_;
  double t_ = 0.0;
  double alpha_ = 0.0;
  bool alpha_valid_ = false;
  long steps_ = 0;
  double frac_sum_ = 0.0;
  long pos_viol_ = 0;
  std::vector<std::pair<double, double>> flag_history_;
};

}  // namespace hweno

#include "hweno/integrator2d.hpp"
