#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/boundary.hpp"
#include "hweno/burgers_exact.hpp"
#include "hweno/equations.hpp"

namespace hweno {

enum class ModelKind { burgers, euler };

inline std::array<double, 4> euler_cons1(double rho, double u, double p,
                                         double gamma = 1.4) {
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u, 0.0};
}

inline std::array<double, 4> euler_cons2(double rho, double u, double v,
                                         double p, double gamma = 1.4) {
  return {rho, rho * u, rho * v,
          p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

struct Problem1 {
  std::string name, description;
  ModelKind model = ModelKind::burgers;
  double x_lo = 0.0, x_hi = 1.0, t_final = 1.0;
  int default_cells = 200;
  Boundary1 bc{};
  std::function<void(double, double*)> init;
  std::function<void(double, double, double*)> exact;  // empty if none
};

struct Problem2 {
  std::string name, description;
  ModelKind model = ModelKind::burgers;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0, t_final = 1.0;
  int default_nx = 100, default_ny = 100;
  Boundary2 bc{};
  std::function<void(double, double, double*)> init;
  std::function<void(double, double, double, double*)> exact;
};

struct ProblemInfo {
  std::string name;
  int dim;
  ModelKind model;
  std::string description;
};

inline const std::vector<ProblemInfo>& problem_registry() {
  static const std::vector<ProblemInfo> reg = {
      {"burgers1d", 1, ModelKind::burgers,
       "1D Burgers, u0 = 0.5 + sin(pi x) on [0,2], smooth at T = 0.5/pi"},
      {"euler1d", 1, ModelKind::euler,
       "1D Euler density wave, rho0 = 1 + 0.2 sin(pi x) on [0,2], T = 2"},
      {"burgers2d", 2, ModelKind::burgers,
       "2D Burgers, u0 = 0.5 + sin(pi (x+y)/2) on [0,4]^2, smooth at T = 0.5/pi"},
      {"euler2d", 2, ModelKind::euler,
       "2D Euler density wave, rho0 = 1 + 0.2 sin(pi (x+y)) on [0,2]^2, T = 2"},
      {"burgers1d-shock", 1, ModelKind::burgers,
       "1D Burgers after shock formation, T = 1.5/pi"},
      {"lax", 1, ModelKind::euler, "Lax shock tube on [-0.5,0.5], T = 0.16"},
      {"shu-osher", 1, ModelKind::euler,
       "Shu-Osher shock / entropy-wave interaction on [-5,5], T = 1.8"},
      {"blast", 1, ModelKind::euler,
       "Woodward-Colella interacting blast waves on [0,1], T = 0.038"},
      {"burgers2d-shock", 2, ModelKind::burgers,
       "2D Burgers after shock formation, T = 1.5/pi"},
      {"dmr", 2, ModelKind::euler,
       "double Mach reflection on [0,4]x[0,1], T = 0.2"},
      {"forward-step", 2, ModelKind::euler,
       "Mach 3 wind tunnel with a step on [0,3]x[0,1], T = 4"},
  };
  return reg;
}

inline const ProblemInfo& find_problem(const std::string& name) {
  for (const auto& p : problem_registry())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown problem: " + name);
}

inline Problem1 make_problem1(const std::string& name) {
  Problem1 p;
  p.name = name;
  if (name == "burgers1d" || name == "burgers1d-shock") {
    const bool shock = name == "burgers1d-shock";
    p.model = ModelKind::burgers;
    p.x_lo = 0.0;
    p.x_hi = 2.0;
    p.t_final = (shock ? 1.5 : 0.5) / M_PI;
    p.default_cells = 80;
    p.bc.left = p.bc.right = BcKind::periodic;
    p.init = [](double x, double* u) { u[0] = 0.5 + std::sin(M_PI * x); };
    BurgersSineExact ex(0.5, 1.0, M_PI);
    p.exact = [ex](double x, double t, double* u) { u[0] = ex.value(x, t); };
    return p;
  }
  if (name == "euler1d") {
    p.model = ModelKind::euler;
    p.x_lo = 0.0;
    p.x_hi = 2.0;
    p.t_final = 2.0;
    p.default_cells = 200;
    p.bc.left = p.bc.right = BcKind::periodic;
    p.init = [](double x, double* u) {
      const auto q = euler_cons1(1.0 + 0.2 * std::sin(M_PI * x), 1.0, 1.0);
      u[0] = q[0];
      u[1] = q[1];
      u[2] = q[2];
    };
    p.exact = [](double x, double t, double* u) {
      const auto q =
          euler_cons1(1.0 + 0.2 * std::sin(M_PI * (x - t)), 1.0, 1.0);
      u[0] = q[0];
      u[1] = q[1];
      u[2] = q[2];
    };
    return p;
  }
  if (name == "lax") {
    p.model = ModelKind::euler;
    p.x_lo = -0.5;
    p.x_hi = 0.5;
    p.t_final = 0.16;
    p.default_cells = 200;
    p.bc.left = p.bc.right = BcKind::outflow;
    p.init = [](double x, double* u) {
      const auto q = x < 0.0 ? euler_cons1(0.445, 0.698, 3.528)
                             : euler_cons1(0.5, 0.0, 0.571);
      u[0] = q[0];
      u[1] = q[1];
      u[2] = q[2];
    };
    return p;
  }
  if (name == "shu-osher") {
    p.model = ModelKind::euler;
    p.x_lo = -5.0;
    p.x_hi = 5.0;
    p.t_final = 1.8;
    p.default_cells = 400;
    p.bc.left = BcKind::inflow;
    p.bc.right = BcKind::outflow;
    const auto post = euler_cons1(3.857143, 2.629369, 10.333333);
    p.bc.left_state = post;
    p.init = [post](double x, double* u) {
      if (x < -4.0) {
        u[0] = post[0];
        u[1] = post[1];
        u[2] = post[2];
      } else {
        const auto q = euler_cons1(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0);
        u[0] = q[0];
        u[1] = q[1];
        u[2] = q[2];
      }
    };
    return p;
  }
  if (name == "blast") {
    p.model = ModelKind::euler;
    p.x_lo = 0.0;
    p.x_hi = 1.0;
    p.t_final = 0.038;
    p.default_cells = 800;
    p.bc.left = p.bc.right = BcKind::reflective;
    p.init = [](double x, double* u) {
      double pr = 1e-2;
      if (x < 0.1) pr = 1e3;
      else if (x > 0.9) pr = 1e2;
      const auto q = euler_cons1(1.0, 0.0, pr);
      u[0] = q[0];
      u[1] = q[1];
      u[2] = q[2];
    };
    return p;
  }
  throw std::invalid_argument("make_problem1: not a 1D problem: " + name);
}

inline Problem2 make_problem2(const std::string& name) {
  Problem2 p;
  p.name = name;
  if (name == "burgers2d" || name == "burgers2d-shock") {
    const bool shock = name == "burgers2d-shock";
    p.model = ModelKind::burgers;
    p.x_lo = p.y_lo = 0.0;
    p.x_hi = p.y_hi = 4.0;
    p.t_final = (shock ? 1.5 : 0.5) / M_PI;
    p.default_nx = p.default_ny = 80;
    p.bc.x_lo = p.bc.x_hi = p.bc.y_lo = p.bc.y_hi = BcKind::periodic;
    p.init = [](double x, double y, double* u) {
      u[0] = 0.5 + std::sin(M_PI * (x + y) / 2.0);
    };
    // reduces to 1D Burgers along s = (x+y)/2
    BurgersSineExact ex(0.5, 1.0, M_PI);
    p.exact = [ex](double x, double y, double t, double* u) {
      u[0] = ex.value(0.5 * (x + y), t);
    };
    return p;
  }
  if (name == "euler2d") {
    p.model = ModelKind::euler;
    p.x_lo = p.y_lo = 0.0;
    p.x_hi = p.y_hi = 2.0;
    p.t_final = 2.0;
    p.default_nx = p.default_ny = 60;
    p.bc.x_lo = p.bc.x_hi = p.bc.y_lo = p.bc.y_hi = BcKind::periodic;
    p.init = [](double x, double y, double* u) {
      const auto q = euler_cons2(1.0 + 0.2 * std::sin(M_PI * (x + y)), 1.0,
                                 1.0, 1.0);
      for (int m = 0; m < 4; ++m) u[m] = q[m];
    };
    p.exact = [](double x, double y, double t, double* u) {
      const auto q = euler_cons2(
          1.0 + 0.2 * std::sin(M_PI * (x + y - 2.0 * t)), 1.0, 1.0, 1.0);
      for (int m = 0; m < 4; ++m) u[m] = q[m];
    };
    return p;
  }
  if (name == "dmr") {
    p.model = ModelKind::euler;
    p.x_lo = 0.0;
    p.x_hi = 4.0;
    p.y_lo = 0.0;
    p.y_hi = 1.0;
    p.t_final = 0.2;
    p.default_nx = 480;
    p.default_ny = 120;
    p.bc.x_lo = BcKind::inflow;
    p.bc.x_hi = BcKind::outflow;
    p.bc.y_lo = BcKind::dmr_bottom;
    p.bc.y_hi = BcKind::dmr_top;
    const double c30 = std::sqrt(3.0) / 2.0;
    const auto post = euler_cons2(8.0, 8.25 * c30, -8.25 * 0.5, 116.5);
    const auto pre = euler_cons2(1.4, 0.0, 0.0, 1.0);
    p.bc.x_lo_state = post;
    p.bc.dmr_post = post;
    p.bc.dmr_pre = pre;
    p.bc.dmr_wall_start = 1.0 / 6.0;
    p.init = [post, pre](double x, double y, double* u) {
      const bool behind = x < 1.0 / 6.0 + y / std::sqrt(3.0);
      const auto& q = behind ? post : pre;
      for (int m = 0; m < 4; ++m) u[m] = q[m];
    };
    return p;
  }
  if (name == "forward-step") {
    p.model = ModelKind::euler;
    p.x_lo = 0.0;
    p.x_hi = 3.0;
    p.y_lo = 0.0;
    p.y_hi = 1.0;
    p.t_final = 4.0;
    p.default_nx = 240;
    p.default_ny = 80;
    p.bc.x_lo = BcKind::inflow;
    p.bc.x_hi = BcKind::outflow;
    p.bc.y_lo = BcKind::reflective;
    p.bc.y_hi = BcKind::reflective;
    p.bc.has_step = true;
    p.bc.step_x = 0.6;
    p.bc.step_y = 0.2;
    const auto inflow = euler_cons2(1.4, 3.0, 0.0, 1.0);
    p.bc.x_lo_state = inflow;
    p.init = [inflow](double, double, double* u) {
      for (int m = 0; m < 4; ++m) u[m] = inflow[m];
    };
    return p;
  }
  throw std::invalid_argument("make_problem2: not a 2D problem: " + name);
}

}  // namespace hweno
