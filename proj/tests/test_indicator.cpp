#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hweno/equations.hpp"
#include "hweno/indicator.hpp"

using namespace hweno;

namespace {

MomentField1 constant_field1(const Grid1& g, double c) {
  MomentField1 f(1, g);
  for (int i = 0; i < g.n_cells; ++i) f.ubar(0, i) = c;
  return f;
}

}  // namespace

TEST_CASE("uniform field flags nothing") {
  const Grid1 g(16, 0.0, 1.0);
  Burgers1D model;
  Boundary1 bc;
  MomentField1 f = constant_field1(g, 0.7);
  fill_ghosts(f, g, bc, model);
  IndicatorConfig cfg;
  const TroubleMap1 tm = kxrcf_flag(f, g, bc, model, cfg);
  CHECK(tm.flagged_fraction() == 0.0);
}

TEST_CASE("a step in scalar data flags the cells whose inflow edge sees it") {
  const Grid1 g(10, 0.0, 1.0);
  Burgers1D model;
  Boundary1 bc;
  MomentField1 f(1, g);
  // rightward advection (u > 0 everywhere), jump between cells 4 and 5
  for (int i = 0; i < 10; ++i) f.ubar(0, i) = i <= 4 ? 2.0 : 1.0;
  fill_ghosts(f, g, bc, model);
  IndicatorConfig cfg;
  const TroubleMap1 tm = kxrcf_flag(f, g, bc, model, cfg);

  // hand evaluation: with u > 0 only the left edge is inflow, the data jumps
  // are those of the cell averages, and the normalization is
  // threshold * sqrt(dx) * |ubar|. The step at 4|5 gives
  //   I_5 = 1 / (sqrt(0.1) * 1) = 3.16 > 0.55,
  // and the periodic wrap puts the mirror jump on cell 0's inflow edge;
  // every other inflow jump is exactly zero (piecewise constant data).
  for (int i = 0; i < 10; ++i) {
    const double jump = std::abs(f.ubar(0, i) - f.ubar(0, i - 1));
    const double norm = std::abs(f.ubar(0, i));
    const bool expect =
        jump > cfg.threshold * std::sqrt(g.dx()) * norm;
    CHECK(tm.troubled(i) == expect);
    CHECK(expect == (i == 5 || i == 0));
  }
  CHECK(tm.stencil_troubled(4));
  CHECK(tm.stencil_troubled(6));
}

TEST_CASE("flag map is translation equivariant on periodic domains") {
  const Grid1 g(24, 0.0, 1.0);
  Burgers1D model;
  Boundary1 bc;
  MomentField1 a(1, g), b(1, g);
  auto bump = [](int i) {
    return 1.0 + (i % 24 == 7 ? 2.0 : 0.0) + 0.1 * std::sin(0.3 * (i % 24));
  };
  const int shift = 5;
  for (int i = 0; i < 24; ++i) {
    a.ubar(0, i) = bump(i);
    b.ubar(0, (i + shift) % 24) = bump(i);
  }
  fill_ghosts(a, g, bc, model);
  fill_ghosts(b, g, bc, model);
  IndicatorConfig cfg;
  const TroubleMap1 ta = kxrcf_flag(a, g, bc, model, cfg);
  const TroubleMap1 tb = kxrcf_flag(b, g, bc, model, cfg);
  for (int i = 0; i < 24; ++i)
    CHECK(ta.troubled(i) == tb.troubled((i + shift) % 24));
}

TEST_CASE("stencil-troubled is the dilation of troubled") {
  const Grid1 g(12, 0.0, 1.0);
  TroubleMap1 tm(g);
  tm.troubled_ref(4) = 1;
  tm.troubled_ref(9) = 1;
  tm.finalize(/*periodic=*/true);
  for (int i = 0; i < 12; ++i) {
    const bool expect = tm.troubled(i - 1) || tm.troubled(i) || tm.troubled(i + 1);
    CHECK(tm.stencil_troubled(i) == expect);
  }
  CHECK(tm.stencil_troubled(3));
  CHECK(tm.stencil_troubled(5));
  CHECK_FALSE(tm.stencil_troubled(7));
}

TEST_CASE("force-all and force-none modes") {
  const Grid1 g(8, 0.0, 1.0);
  Burgers1D model;
  Boundary1 bc;
  MomentField1 f = constant_field1(g, 1.0);
  fill_ghosts(f, g, bc, model);
  IndicatorConfig cfg;
  cfg.mode = IndicatorMode::force_all;
  CHECK(kxrcf_flag(f, g, bc, model, cfg).flagged_fraction() == 1.0);
  cfg.mode = IndicatorMode::force_none;
  CHECK(kxrcf_flag(f, g, bc, model, cfg).flagged_fraction() == 0.0);
}

TEST_CASE("vacuum-level fields are not flagged") {
  const Grid1 g(8, 0.0, 1.0);
  Burgers1D model;
  Boundary1 bc;
  MomentField1 f(1, g);
  for (int i = 0; i < 8; ++i) f.ubar(0, i) = (i == 3 ? 1e-18 : 1e-16);
  fill_ghosts(f, g, bc, model);
  IndicatorConfig cfg;
  CHECK(kxrcf_flag(f, g, bc, model, cfg).flagged_fraction() == 0.0);
}

TEST_CASE("2D: constant field flags nothing, shock column is caught") {
  const Grid2 g(12, 8, 0.0, 1.2, 0.0, 0.8);
  Burgers2D model;
  Boundary2 bc;
  const Kernel2 ker = build_kernel2(g.dx(), g.dy());
  IndicatorConfig cfg;

  MomentField2 f(1, g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f.ubar(0, i, j) = 1.1;
  fill_ghosts(f, g, bc, model);
  CHECK(kxrcf_flag(f, g, bc, model, cfg, &ker).flagged_fraction() == 0.0);

  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f.ubar(0, i, j) = i <= 5 ? 2.0 : 1.0;
  fill_ghosts(f, g, bc, model);
  const TroubleMap2 tm = kxrcf_flag(f, g, bc, model, cfg, &ker);
  bool any = false;
  for (int j = 0; j < g.ny; ++j) any = any || tm.troubled(6, j);
  CHECK(any);
  // dilation in 2D covers the 3x3 block
  for (int j = 1; j < g.ny - 1; ++j)
    if (tm.troubled(6, j)) {
      CHECK(tm.stencil_troubled(5, j));
      CHECK(tm.stencil_troubled(7, j - 1));
    }
}
