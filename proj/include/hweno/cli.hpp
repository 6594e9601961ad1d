#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hweno/harness.hpp"

namespace hweno {

inline SchemeMode parse_scheme_mode(const std::string& s) {
  if (s == "hybrid" || s == "new-hybrid") return SchemeMode::hybrid;
  if (s == "force-all" || s == "new-hweno" || s == "force-all-troubled")
    return SchemeMode::force_all_troubled;
  if (s == "linear" || s == "linear-only") return SchemeMode::linear_only;
  throw CLI::ValidationError("--mode", "unknown scheme mode: " + s);
}

inline GammaMode parse_gamma_mode(const std::string& s) {
  if (s == "paper" || s == "paper-default") return GammaMode::paper_default;
  if (s == "uniform") return GammaMode::uniform;
  if (s == "random" || s == "random-per-step")
    return GammaMode::random_per_step;
  throw CLI::ValidationError("--gamma", "unknown gamma mode: " + s);
}

namespace detail_cli {

struct CommonOpts {
  std::string problem;
  std::string mode = "new-hybrid";
  std::string gamma = "paper";
  std::string dt_mode;
  std::uint64_t seed = 20250811;
  double cfl = 0.6;
  double cfl_accuracy = 0.8;
  double t_final = -1.0;
  double indicator_threshold = 0.05;
  int indicator_k = 0;
  bool indicator_all_vars = false;
  bool indicator_min_norm = false;
  double indicator_veto = 0.05;
  bool reflag_per_stage = true;
  std::string out_dir;
};

inline void add_common(CLI::App* cmd, CommonOpts& o, bool need_problem) {
  auto* p = cmd->add_option("--problem", o.problem,
                            "problem id (see list-problems)");
  if (need_problem) p->required();
  cmd->add_option("--mode", o.mode,
                  "scheme mode: new-hybrid|force-all|linear");
  cmd->add_option("--gamma", o.gamma,
                  "linear-weight choice: paper|uniform|random");
  cmd->add_option("--seed", o.seed, "seed for random gamma mode");
  cmd->add_option("--cfl", o.cfl, "CFL number");
  cmd->add_option("--cfl-accuracy", o.cfl_accuracy,
                  "dt prefactor for accuracy-mode refinement studies");
  cmd->add_option("--indicator-threshold", o.indicator_threshold,
                  "KXRCF flagging threshold");
  cmd->add_option("--indicator-k", o.indicator_k,
                  "data degree in the KXRCF normalization (0 or 1)");
  cmd->add_flag("--indicator-all-vars", o.indicator_all_vars,
                "flag only when every indicator variable trips");
  cmd->add_flag("--indicator-min-norm", o.indicator_min_norm,
                "normalize by the smallest own-boundary trace magnitude");
  cmd->add_option("--indicator-veto", o.indicator_veto,
                  "smooth-veto gate level on the high-order trace jumps");
  cmd->add_flag("--reflag-per-stage,!--reflag-per-step", o.reflag_per_stage,
                "recompute troubled cells every RK stage (default) or only "
                "once per step");
  cmd->add_option("--dt-mode", o.dt_mode, "time step law: production|accuracy");
  cmd->add_option("--final-time", o.t_final, "override the final time");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->set_config("--config", "",
                  "plain key = value configuration file; flags override");
}

inline SchemeConfig scheme_from(const CommonOpts& o,
                                DtMode default_dt_mode) {
  SchemeConfig s;
  s.mode = parse_scheme_mode(o.mode);
  s.gamma_mode = parse_gamma_mode(o.gamma);
  s.seed = o.seed;
  s.cfl = o.cfl;
  s.cfl_accuracy = o.cfl_accuracy;
  s.indicator.threshold = o.indicator_threshold;
  s.indicator.k = o.indicator_k;
  s.indicator.require_all = o.indicator_all_vars;
  s.indicator.min_norm = o.indicator_min_norm;
  s.indicator.smooth_veto = o.indicator_veto;
  s.reflag_per_stage = o.reflag_per_stage;
  s.dt_mode = default_dt_mode;
  if (o.dt_mode == "production") s.dt_mode = DtMode::production;
  else if (o.dt_mode == "accuracy") s.dt_mode = DtMode::accuracy;
  else if (!o.dt_mode.empty())
    throw CLI::ValidationError("--dt-mode", "unknown dt mode: " + o.dt_mode);
  return s;
}

}  // namespace detail_cli

inline int cli_main(int argc, const char* const* argv) {
  CLI::App app{"fifth-order hybrid HWENO finite volume solver"};
  app.require_subcommand(1);

  auto* list_cmd =
      app.add_subcommand("list-problems", "list the registered problems");

  auto* conv_cmd = app.add_subcommand(
      "converge", "accuracy study over a mesh sequence (smooth problems)");
  detail_cli::CommonOpts conv_opts;
  std::vector<int> meshes;
  detail_cli::add_common(conv_cmd, conv_opts, true);
  conv_cmd->add_option("--meshes", meshes, "cell counts, e.g. 40,80,120")
      ->required()
      ->delimiter(',');

  auto* run_cmd =
      app.add_subcommand("run", "single solve with snapshot + flag history");
  detail_cli::CommonOpts run_opts;
  int cells = 0, nx = 0, ny = 0;
  detail_cli::add_common(run_cmd, run_opts, true);
  run_cmd->add_option("--cells", cells, "1D cell count (or square 2D mesh)");
  run_cmd->add_option("--nx", nx, "2D cells in x");
  run_cmd->add_option("--ny", ny, "2D cells in y");

  auto* cmp_cmd = app.add_subcommand(
      "compare", "restrict a finer reference onto a solution, report norms");
  std::string sol_path, ref_path;
  int cmp_var = 0;
  cmp_cmd->add_option("--solution", sol_path, "solution file")->required();
  cmp_cmd->add_option("--reference", ref_path, "finer-mesh reference file")
      ->required();
  cmp_cmd->add_option("--var", cmp_var, "variable column to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (list_cmd->parsed()) {
      const auto& reg = problem_registry();
      for (const auto& p : reg)
        std::cout << p.name << "  (" << p.dim << "D, "
                  << (p.model == ModelKind::burgers ? "burgers" : "euler")
                  << ")  " << p.description << "\n";
      std::cout << reg.size() << " problems\n";
      return 0;
    }
    if (conv_cmd->parsed()) {
      RunConfig cfg;
      cfg.problem = conv_opts.problem;
      cfg.meshes = meshes;
      cfg.scheme = detail_cli::scheme_from(conv_opts, DtMode::accuracy);
      cfg.t_final = conv_opts.t_final;
      const ConvergenceReport rep = run_convergence(cfg);
      std::cout << convergence_table_text(rep, /*with_times=*/true);
      if (!conv_opts.out_dir.empty())
        atomic_write(conv_opts.out_dir + "/" + cfg.problem + "_convergence.dat",
                     convergence_table_text(rep, /*with_times=*/false));
      return 0;
    }
    if (run_cmd->parsed()) {
      RunConfig cfg;
      cfg.problem = run_opts.problem;
      cfg.scheme = detail_cli::scheme_from(run_opts, DtMode::production);
      cfg.t_final = run_opts.t_final;
      cfg.nx = nx > 0 ? nx : cells;
      cfg.ny = ny > 0 ? ny : cells;
      cfg.out_dir = run_opts.out_dir;
      const BenchmarkResult r = run_benchmark(cfg);
      std::cout << "problem " << cfg.problem << "\n"
                << "steps " << r.steps << "\n"
                << "final_time " << fmt_g17(r.t_final) << "\n"
                << "mean_flagged_fraction " << fmt_g17(r.mean_flag_fraction)
                << "\n"
                << "positivity_violations " << r.positivity_violations
                << "\n";
      if (r.positivity_violations > 0)
        std::cout << "positivity_internal " << r.positivity_internal << "\n"
                  << "positivity_interface " << r.positivity_interface << "\n"
                  << "min_pressure " << fmt_g17(r.min_pressure) << "\n";
      return 0;
    }
    if (cmp_cmd->parsed()) {
      const Solution1 sol = read_solution1(sol_path);
      const Solution1 ref = read_solution1(ref_path);
      const ErrorNorms e = compare_to_reference(sol, ref, cmp_var);
      std::cout << "L1 " << fmt_g17(e.l1) << "\n"
                << "Linf " << fmt_g17(e.linf) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace hweno
