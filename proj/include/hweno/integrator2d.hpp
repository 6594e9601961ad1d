#pragma once

// 2D solver companion to integrator.hpp (included from there).

namespace hweno {

template <class Model>
class Solver2 {
 public:
  static constexpr int NV = Model::n_vars;

  Solver2(const Grid2& grid, const Boundary2& bc, const Model& model,
          const SchemeConfig& cfg)
      : g_(grid), bc_(bc), model_(model), cfg_(cfg), U_(NV, grid),
        U0_(NV, grid), K_(NV, grid), tm_(grid), rng_(cfg.seed),
        ker_(build_kernel2(grid.dx(), grid.dy())) {
    bc_.validate();
    ind_ = cfg_.indicator;
    ind_.mode = indicator_mode_for(cfg_.mode);
    gamma3_ = paper_gamma3();
    gamma5_ = paper_gamma5();
    if (cfg_.gamma_mode == GammaMode::uniform) {
      gamma3_ = uniform_gamma3();
      gamma5_ = uniform_gamma5();
    }
    const std::size_t ncell =
        static_cast<std::size_t>(g_.nx + 2) * (g_.ny + 2);
    trW_.assign(ncell * 3 * NV, 0.0);
    trE_.assign(ncell * 3 * NV, 0.0);
    trS_.assign(ncell * 3 * NV, 0.0);
    trN_.assign(ncell * 3 * NV, 0.0);
    fx_.assign(static_cast<std::size_t>(g_.ny) * (g_.nx + 1) * 3 * NV, 0.0);
    fy_.assign(static_cast<std::size_t>(g_.ny + 1) * g_.nx * 3 * NV, 0.0);
    build_fluid_mask();
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
  const Grid2& grid() const { return g_; }
  const Kernel2& kernel() const { return ker_; }
  const MomentField2& field() const { return U_; }
  MomentField2& field() { return U_; }
  const TroubleMap2& trouble() const { return tm_; }
  const std::vector<std::uint8_t>& fluid_mask() const { return fluid_; }
  bool is_fluid(int i, int j) const { return fluid_[tm_.at(i, j)] != 0; }
  long steps() const { return steps_; }
  double mean_flag_fraction() const {
    return steps_ ? frac_sum_ / steps_ : 0.0;
  }
  const std::vector<std::pair<double, double>>& flag_history() const {
    return flag_history_;
  }
  long positivity_violations() const { return pos_viol_; }
  long positivity_violations_internal() const { return pos_viol_int_; }
  long positivity_violations_interface() const { return pos_viol_ifc_; }
  double min_pressure_seen() const { return min_p_; }

  double suggest_dt(double remaining) const {
    double ax = 0.0, ay = 0.0, q[NV];
    for (int j = 0; j < g_.ny; ++j)
      for (int i = 0; i < g_.nx; ++i) {
        if (!fluid_[tm_.at(i, j)]) continue;
        for (int m = 0; m < NV; ++m) q[m] = U_.ubar(m, i, j);
        ax = std::max(ax, model_.wavespeed_x(q));
        ay = std::max(ay, model_.wavespeed_y(q));
      }
    const double cfl = cfg_.dt_mode == DtMode::accuracy ? cfg_.cfl_accuracy
                                                        : cfg_.cfl;
    return compute_dt_2d(ax, ay, g_.dx(), g_.dy(), cfl, cfg_.dt_mode,
                         remaining);
  }

  void advance(double dt) {
    draw_gamma();
    prepare(U_, t_, true);
    flag_history_.emplace_back(t_, tm_.flagged_fraction(&fluid_));
    frac_sum_ += tm_.flagged_fraction(&fluid_);
    // the step anchors at the limited state, as in RKDG limiting
    U0_.ub = U_.ub;
    U0_.vb = U_.vb;
    U0_.wb = U_.wb;
    eval_rhs(U_, K_);
    stage_combine(1.0, 0.0, dt);
    check_stage(1);

    prepare(U_, t_ + dt, cfg_.reflag_per_stage);
    eval_rhs(U_, K_);
    stage_combine(0.75, 0.25, 0.25 * dt);
    check_stage(2);

    prepare(U_, t_ + 0.5 * dt, cfg_.reflag_per_stage);
    eval_rhs(U_, K_);
    stage_combine(1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0 * dt);
    check_stage(3);

    t_ += dt;
    ++steps_;
  }

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

  void rhs_for_test(MomentField2& field, double t, MomentField2& out) {
    prepare(field, t, true);
    eval_rhs(field, out);
  }

 private:
  void stage_combine(double a, double b, double c) {
    detail_rk::lincomb(U_.ub, a, U0_.ub, b, U_.ub, c, K_.ub);
    detail_rk::lincomb(U_.vb, a, U0_.vb, b, U_.vb, c, K_.vb);
    detail_rk::lincomb(U_.wb, a, U0_.wb, b, U_.wb, c, K_.wb);
  }

  void build_fluid_mask() {
    fluid_.assign(tm_.flag.size(), 1);
    if (!bc_.has_step) return;
    const int G = g_.n_ghost;
    for (int j = -G; j < g_.ny + G; ++j)
      for (int i = -G; i < g_.nx + G; ++i)
        if (g_.xc(i) > bc_.step_x && g_.yc(j) < bc_.step_y)
          fluid_[tm_.at(i, j)] = 0;
  }

  void draw_gamma() {
    if (cfg_.gamma_mode != GammaMode::random_per_step) return;
    std::uniform_real_distribution<double> dist(0.01, 1.0);
    double a3[3], a5[5], s3 = 0.0, s5 = 0.0;
    for (double& a : a3) {
      a = dist(rng_);
      s3 += a;
    }
    for (double& a : a5) {
      a = dist(rng_);
      s5 += a;
    }
    gamma3_ = {a3[0] / s3, a3[1] / s3, a3[2] / s3};
    for (int n = 0; n < 5; ++n) gamma5_.g[n] = a5[n] / s5;
  }

  void check_stage(int stage) const { check_finite_state(U_, stage); }

  void check_finite_state(const MomentField2& U, int stage) const {
    int m = 0, i = 0, j = 0;
    if (U.find_nonfinite(m, i, j)) {
      std::ostringstream os;
      os << "Solver2: non-finite state (var " << m << ", cell " << i << ","
         << j << ") ";
      if (stage > 0)
        os << "after RK stage " << stage;
      else
        os << "entering a stage";
      os << " at t=" << t_;
      throw std::runtime_error(os.str());
    }
  }

  void prepare(MomentField2& U, double t, bool reflag) {
    check_finite_state(U, 0);
    fill_ghosts(U, g_, bc_, model_, t);
    if (reflag)
      tm_ = kxrcf_flag(U, g_, bc_, model_, ind_, &ker_,
                       bc_.has_step ? &fluid_ : nullptr);
    if (cfg_.mode != SchemeMode::linear_only) modify_troubled(U);
    fill_ghosts(U, g_, bc_, model_, t);
    if (cfg_.alpha_per_stage || !alpha_valid_) {
      double ax = 0.0, ay = 0.0, q[NV];
      for (int j = 0; j < g_.ny; ++j)
        for (int i = 0; i < g_.nx; ++i) {
          if (!fluid_[tm_.at(i, j)]) continue;
          for (int m = 0; m < NV; ++m) q[m] = U.ubar(m, i, j);
          ax = std::max(ax, model_.wavespeed_x(q));
          ay = std::max(ay, model_.wavespeed_y(q));
        }
      alpha_x_ = ax;
      alpha_y_ = ay;
      alpha_valid_ = true;
    }
  }

  void gather(const MomentField2& U, int m, int i, int j,
              StencilData2& z) const {
    int s = 0;
    for (int b = -1; b <= 1; ++b)
      for (int a = -1; a <= 1; ++a) z.z[s++] = U.ubar(m, i + a, j + b);
    z.z[9] = U.vbar(m, i, j - 1);
    z.z[10] = U.vbar(m, i - 1, j);
    z.z[11] = U.vbar(m, i, j);
    z.z[12] = U.vbar(m, i + 1, j);
    z.z[13] = U.vbar(m, i, j + 1);
    z.z[14] = U.wbar(m, i, j - 1);
    z.z[15] = U.wbar(m, i - 1, j);
    z.z[16] = U.wbar(m, i, j);
    z.z[17] = U.wbar(m, i + 1, j);
    z.z[18] = U.wbar(m, i, j + 1);
  }

  void modify_troubled(MomentField2& U) {
    mod_cells_.clear();
    mod_values_.clear();
    for (int j = 0; j < g_.ny; ++j) {
      for (int i = 0; i < g_.nx; ++i) {
        if (!tm_.troubled(i, j) || !fluid_[tm_.at(i, j)]) continue;
        mod_cells_.push_back(i);
        mod_cells_.push_back(j);
        if constexpr (!Model::is_system) {
          const Stencil1 row{U.ubar(0, i - 1, j), U.ubar(0, i, j),
                             U.ubar(0, i + 1, j), U.vbar(0, i - 1, j),
                             U.vbar(0, i, j),     U.vbar(0, i + 1, j)};
          const Stencil1 col{U.ubar(0, i, j - 1), U.ubar(0, i, j),
                             U.ubar(0, i, j + 1), U.wbar(0, i, j - 1),
                             U.wbar(0, i, j),     U.wbar(0, i, j + 1)};
          const auto vw = modify_moments_2d(row, col, gamma3_, cfg_.eps);
          mod_values_.push_back(vw[0]);
          mod_values_.push_back(vw[1]);
        } else {
          double L[NV * NV], R[NV * NV], q[NV], hat[NV];
          for (int m = 0; m < NV; ++m) q[m] = U.ubar(m, i, j);
          try {
            model_.eigensystem_x(q, q, L, R);
          } catch (const std::exception& ex) {
            std::ostringstream os;
            os << ex.what() << " [modify at cell (" << i << "," << j
               << ") t=" << t_ << " state";
            for (int m = 0; m < NV; ++m) os << " " << q[m];
            os << "]";
            throw std::runtime_error(os.str());
          }
          for (int c = 0; c < NV; ++c) {
            const double* Lr = L + c * NV;
            double um = 0, u0 = 0, up = 0, vm = 0, vp = 0;
            for (int m = 0; m < NV; ++m) {
              um += Lr[m] * U.ubar(m, i - 1, j);
              u0 += Lr[m] * U.ubar(m, i, j);
              up += Lr[m] * U.ubar(m, i + 1, j);
              vm += Lr[m] * U.vbar(m, i - 1, j);
              vp += Lr[m] * U.vbar(m, i + 1, j);
            }
            hat[c] = modify_first_moment({um, u0, up, vm, 0.0, vp}, gamma3_,
                                         cfg_.eps);
          }
          for (int m = 0; m < NV; ++m) {
            double v = 0.0;
            for (int c = 0; c < NV; ++c) v += R[m * NV + c] * hat[c];
            mod_values_.push_back(v);
          }
          model_.eigensystem_y(q, q, L, R);
          for (int c = 0; c < NV; ++c) {
            const double* Lr = L + c * NV;
            double um = 0, u0 = 0, up = 0, wm = 0, wp = 0;
            for (int m = 0; m < NV; ++m) {
              um += Lr[m] * U.ubar(m, i, j - 1);
              u0 += Lr[m] * U.ubar(m, i, j);
              up += Lr[m] * U.ubar(m, i, j + 1);
              wm += Lr[m] * U.wbar(m, i, j - 1);
              wp += Lr[m] * U.wbar(m, i, j + 1);
            }
            hat[c] = modify_first_moment({um, u0, up, wm, 0.0, wp}, gamma3_,
                                         cfg_.eps);
          }
          for (int m = 0; m < NV; ++m) {
            double w = 0.0;
            for (int c = 0; c < NV; ++c) w += R[m * NV + c] * hat[c];
            mod_values_.push_back(w);
          }
        }
      }
    }
    std::size_t k = 0;
    for (std::size_t idx = 0; idx < mod_cells_.size(); idx += 2) {
      const int i = mod_cells_[idx], j = mod_cells_[idx + 1];
      if constexpr (!Model::is_system) {
        U.vbar(0, i, j) = mod_values_[k++];
        U.wbar(0, i, j) = mod_values_[k++];
      } else {
        for (int m = 0; m < NV; ++m) U.vbar(m, i, j) = mod_values_[k++];
        for (int m = 0; m < NV; ++m) U.wbar(m, i, j) = mod_values_[k++];
      }
    }
  }

  std::size_t tidx(int i, int j, int k, int m) const {
    return ((static_cast<std::size_t>(j + 1) * (g_.nx + 2) + (i + 1)) * 3 +
            k) * NV + m;
  }
  std::size_t fxidx(int f, int j, int k, int m) const {
    return ((static_cast<std::size_t>(j) * (g_.nx + 1) + f) * 3 + k) * NV + m;
  }
  std::size_t fyidx(int i, int f, int k, int m) const {
    return ((static_cast<std::size_t>(f) * g_.nx + i) * 3 + k) * NV + m;
  }

  void eval_rhs(const MomentField2& U, MomentField2& out) {
    const int nx = g_.nx, ny = g_.ny;
    const double dx = g_.dx(), dy = g_.dy();
    const bool lin_only = cfg_.mode == SchemeMode::linear_only;
    const double wq[3] = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
    const double gs = std::sqrt(15.0) / 10.0;
    const double xi[3] = {-gs, 0.0, gs};

    // edge traces for all cells with a one-cell halo
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = -1; j <= ny; ++j) {
      StencilData2 z[NV];
      StencilData2 zc;
      for (int i = -1; i <= nx; ++i) {
        const bool tro = !lin_only && tm_.stencil_troubled(i, j);
        for (int m = 0; m < NV; ++m) gather(U, m, i, j, z[m]);
        if (!tro) {
          for (int m = 0; m < NV; ++m) {
            for (int k = 0; k < 3; ++k) {
              trW_[tidx(i, j, k, m)] = linear_point_2d(ker_, z[m], 0 * 3 + k);
              trE_[tidx(i, j, k, m)] = linear_point_2d(ker_, z[m], 1 * 3 + k);
              trS_[tidx(i, j, k, m)] = linear_point_2d(ker_, z[m], 2 * 3 + k);
              trN_[tidx(i, j, k, m)] = linear_point_2d(ker_, z[m], 3 * 3 + k);
            }
          }
        } else if constexpr (!Model::is_system) {
          double ev[3];
          hweno_edge_values(ker_, z[0], 0, gamma5_, cfg_.eps, ev);
          for (int k = 0; k < 3; ++k) trW_[tidx(i, j, k, 0)] = ev[k];
          hweno_edge_values(ker_, z[0], 1, gamma5_, cfg_.eps, ev);
          for (int k = 0; k < 3; ++k) trE_[tidx(i, j, k, 0)] = ev[k];
          hweno_edge_values(ker_, z[0], 2, gamma5_, cfg_.eps, ev);
          for (int k = 0; k < 3; ++k) trS_[tidx(i, j, k, 0)] = ev[k];
          hweno_edge_values(ker_, z[0], 3, gamma5_, cfg_.eps, ev);
          for (int k = 0; k < 3; ++k) trN_[tidx(i, j, k, 0)] = ev[k];
        } else {
          // characteristic HWENO per edge, eigensystem at each interface
          double L[NV * NV], R[NV * NV], qa[NV], qb[NV];
          double hat[NV][3];
          for (int m = 0; m < NV; ++m) qa[m] = U.ubar(m, i, j);
          const int ni[4] = {i - 1, i + 1, i, i};
          const int nj[4] = {j, j, j - 1, j + 1};
          std::vector<double>* dest[4] = {&trW_, &trE_, &trS_, &trN_};
          for (int e = 0; e < 4; ++e) {
            for (int m = 0; m < NV; ++m) qb[m] = U.ubar(m, ni[e], nj[e]);
            try {
              if (e < 2)
                model_.eigensystem_x(qa, qb, L, R);
              else
                model_.eigensystem_y(qa, qb, L, R);
            } catch (const std::exception& ex) {
              std::ostringstream os;
              os << ex.what() << " [cell (" << i << "," << j << ") edge " << e
                 << " t=" << t_ << " self";
              for (int m = 0; m < NV; ++m) os << " " << qa[m];
              os << " nbr";
              for (int m = 0; m < NV; ++m) os << " " << qb[m];
              os << "]";
              throw std::runtime_error(os.str());
            }
            for (int c = 0; c < NV; ++c) {
              const double* Lr = L + c * NV;
              for (int s = 0; s < 19; ++s) {
                double acc = 0.0;
                for (int m = 0; m < NV; ++m) acc += Lr[m] * z[m].z[s];
                zc.z[s] = acc;
              }
              hweno_edge_values(ker_, zc, e, gamma5_, cfg_.eps, hat[c]);
            }
            for (int k = 0; k < 3; ++k)
              for (int m = 0; m < NV; ++m) {
                double acc = 0.0;
                for (int c = 0; c < NV; ++c) acc += R[m * NV + c] * hat[c][k];
                (*dest[e])[tidx(i, j, k, m)] = acc;
              }
          }
        }
      }
    }

    // trace sanity scan with cell diagnostics
    for (int j = -1; j <= ny; ++j)
      for (int i = -1; i <= nx; ++i)
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < NV; ++m)
            if (!std::isfinite(trW_[tidx(i, j, k, m)]) ||
                !std::isfinite(trE_[tidx(i, j, k, m)]) ||
                !std::isfinite(trS_[tidx(i, j, k, m)]) ||
                !std::isfinite(trN_[tidx(i, j, k, m)])) {
              std::ostringstream os;
              os << "rhs_2d: non-finite reconstruction at cell (" << i << ","
                 << j << ") var " << m << " t=" << t_;
              throw std::runtime_error(os.str());
            }

    // interface fluxes
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < ny; ++j)
      for (int f = 0; f <= nx; ++f)
        for (int k = 0; k < 3; ++k)
          lax_friedrichs<NV>(
              &trE_[tidx(f - 1, j, k, 0)], &trW_[tidx(f, j, k, 0)], alpha_x_,
              [this](const double* q, double* fv) { model_.flux_x(q, fv); },
              &fx_[fxidx(f, j, k, 0)]);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int f = 0; f <= ny; ++f)
      for (int i = 0; i < nx; ++i)
        for (int k = 0; k < 3; ++k)
          lax_friedrichs<NV>(
              &trN_[tidx(i, f - 1, k, 0)], &trS_[tidx(i, f, k, 0)], alpha_y_,
              [this](const double* q, double* fv) { model_.flux_y(q, fv); },
              &fy_[fyidx(i, f, k, 0)]);

    // cell updates
    long viol = 0, viol_int = 0, viol_ifc = 0;
    double minp = min_p_;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : viol, viol_int, viol_ifc) reduction(min : minp)
#endif
    for (int j = 0; j < ny; ++j) {
      StencilData2 z[NV];
      double uin[9][NV], fv[NV], gv[NV];
      for (int i = 0; i < nx; ++i) {
        if (!fluid_[tm_.at(i, j)]) {
          for (int m = 0; m < NV; ++m) {
            out.ubar(m, i, j) = 0.0;
            out.vbar(m, i, j) = 0.0;
            out.wbar(m, i, j) = 0.0;
          }
          continue;
        }
        for (int m = 0; m < NV; ++m) gather(U, m, i, j, z[m]);
        for (int p = 0; p < 9; ++p)
          for (int m = 0; m < NV; ++m)
            uin[p][m] = linear_internal_2d(ker_, z[m], p);

        if constexpr (Model::is_system) {
          if (cfg_.monitor_positivity) {
            for (int p = 0; p < 9; ++p) {
              const double pr = model_.pressure(uin[p]);
              minp = std::min(minp, pr);
              if (!(uin[p][0] > 0.0) || !(pr > 0.0)) {
                ++viol;
                ++viol_int;
              }
            }
            double q[NV];
            for (int k = 0; k < 3; ++k) {
              const std::vector<double>* arr[4] = {&trW_, &trE_, &trS_,
                                                   &trN_};
              for (int e = 0; e < 4; ++e) {
                for (int m = 0; m < NV; ++m)
                  q[m] = (*arr[e])[tidx(i, j, k, m)];
                const double pr = model_.pressure(q);
                minp = std::min(minp, pr);
                if (!(q[0] > 0.0) || !(pr > 0.0)) {
                  ++viol;
                  ++viol_ifc;
                }
              }
            }
          }
        }

        double Fvol[NV] = {0.0}, Gvol[NV] = {0.0};
        for (int ky = 0; ky < 3; ++ky)
          for (int kx = 0; kx < 3; ++kx) {
            const double w = wq[kx] * wq[ky];
            model_.flux_x(uin[ky * 3 + kx], fv);
            model_.flux_y(uin[ky * 3 + kx], gv);
            for (int m = 0; m < NV; ++m) {
              Fvol[m] += w * fv[m];
              Gvol[m] += w * gv[m];
            }
          }

        for (int m = 0; m < NV; ++m) {
          double sxd = 0, sxs = 0, sxe = 0, syd = 0, sys = 0, syx = 0;
          for (int k = 0; k < 3; ++k) {
            const double fe = fx_[fxidx(i + 1, j, k, m)];
            const double fw = fx_[fxidx(i, j, k, m)];
            const double gn = fy_[fyidx(i, j + 1, k, m)];
            const double gs2 = fy_[fyidx(i, j, k, m)];
            sxd += wq[k] * (fe - fw);
            sxs += wq[k] * (fe + fw);
            sxe += wq[k] * xi[k] * (fe - fw);
            syd += wq[k] * (gn - gs2);
            sys += wq[k] * (gn + gs2);
            syx += wq[k] * xi[k] * (gn - gs2);
          }
          out.ubar(m, i, j) = -sxd / dx - syd / dy;
          out.vbar(m, i, j) = -sxs / (2.0 * dx) + Fvol[m] / dx - syx / dy;
          out.wbar(m, i, j) = -sxe / dx - sys / (2.0 * dy) + Gvol[m] / dy;
        }
      }
    }
    pos_viol_ += viol;
    pos_viol_int_ += viol_int;
    pos_viol_ifc_ += viol_ifc;
    min_p_ = std::min(min_p_, minp);
  }

  Grid2 g_;
  Boundary2 bc_;
  Model model_;
  SchemeConfig cfg_;
  IndicatorConfig ind_;
  MomentField2 U_, U0_, K_;
  TroubleMap2 tm_;
  std::mt19937_64 rng_;
  Kernel2 ker_;
  Weights3 gamma3_{0.98, 0.01, 0.01};
  Weights5 gamma5_{{0.96, 0.01, 0.01, 0.01, 0.01}};
  std::vector<std::uint8_t> fluid_;
  std::vector<double> trW_, trE_, trS_, trN_, fx_, fy_;
  std::vector<int> mod_cells_;
  std::vector<double> mod_values_;
  double t_ = 0.0;
  double alpha_x_ = 0.0, alpha_y_ = 0.0;
  bool alpha_valid_ = false;
  long steps_ = 0;
  double frac_sum_ = 0.0;
  long pos_viol_ = 0;
  long pos_viol_int_ = 0, pos_viol_ifc_ = 0;
  double min_p_ = 1e300;
  std::vector<std::pair<double, double>> flag_history_;
};

}  // namespace hweno
