#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hweno/quadrature.hpp"

using namespace hweno;

namespace {

// exact integral of t^p over [-1/2, 1/2]
double mono_integral(int p) {
  return (std::pow(0.5, p + 1) - std::pow(-0.5, p + 1)) / (p + 1);
}

double apply(const QuadratureRule& q, int p) {
  double s = 0.0;
  for (int k = 0; k < q.n; ++k) s += q.weights[k] * std::pow(q.nodes[k], p);
  return s;
}

void check_rule(const QuadratureRule& q, int exact_degree) {
  double wsum = 0.0, nsum = 0.0;
  for (int k = 0; k < q.n; ++k) {
    wsum += q.weights[k];
    nsum += q.nodes[k];
  }
  CHECK(wsum == Catch::Approx(1.0).margin(1e-15));
  CHECK(nsum == Catch::Approx(0.0).margin(1e-15));
  for (int p = 0; p <= exact_degree; ++p)
    CHECK(apply(q, p) == Catch::Approx(mono_integral(p)).margin(1e-15));
}

}  // namespace

TEST_CASE("four-point Gauss-Lobatto integrates degree 5 exactly") {
  check_rule(gauss_lobatto4(), 5);
  // degree 6 must fail (sanity that the check is sharp)
  CHECK(std::abs(apply(gauss_lobatto4(), 6) - mono_integral(6)) > 1e-6);
}

TEST_CASE("three-point Gauss integrates degree 5 exactly") {
  check_rule(gauss3(), 5);
  CHECK(std::abs(apply(gauss3(), 6) - mono_integral(6)) > 1e-6);
}

TEST_CASE("five-point Gauss integrates degree 9 exactly") {
  check_rule(gauss5(), 9);
  CHECK(std::abs(apply(gauss5(), 10) - mono_integral(10)) > 1e-9);
}

TEST_CASE("Gauss-Lobatto endpoints and weights match the scheme constants") {
  const QuadratureRule& q = gauss_lobatto4();
  CHECK(q.nodes[0] == -0.5);
  CHECK(q.nodes[3] == 0.5);
  CHECK(q.nodes[2] == Catch::Approx(std::sqrt(5.0) / 10.0).epsilon(1e-15));
  CHECK(q.weights[0] == Catch::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(q.weights[1] == Catch::Approx(5.0 / 12.0).epsilon(1e-15));
}
