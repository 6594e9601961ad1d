#pragma once

#include <array>
#include <cmath>

namespace hweno {

// Quadrature rule on a reference cell. Nodes are offsets from the cell center
// in units of the cell width, weights are normalized so they sum to one:
//   (1/dx) \int_I q(x) dx  ~=  sum_k w[k] q(xc + node[k] dx).
struct QuadratureRule {
  int n = 0;
  std::array<double, 5> nodes{};
  std::array<double, 5> weights{};
};

// Four-point Gauss-Lobatto rule (endpoints included), exact through degree 5.
inline const QuadratureRule& gauss_lobatto4() {
  static const QuadratureRule r = [] {
    QuadratureRule q;
    q.n = 4;
    const double s = std::sqrt(5.0) / 10.0;
    q.nodes = {-0.5, -s, s, 0.5, 0.0};
    q.weights = {1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0, 0.0};
    return q;
  }();
  return r;
}

// Three-point Gauss-Legendre rule, exact through degree 5.
inline const QuadratureRule& gauss3() {
  static const QuadratureRule r = [] {
    QuadratureRule q;
    q.n = 3;
    const double s = std::sqrt(15.0) / 10.0;
    q.nodes = {-s, 0.0, s, 0.0, 0.0};
    q.weights = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0, 0.0, 0.0};
    return q;
  }();
  return r;
}

// Five-point Gauss-Legendre rule, exact through degree 9. Used for the
// one-time initialization and error integrals.
inline const QuadratureRule& gauss5() {
  static const QuadratureRule r = [] {
    QuadratureRule q;
    q.n = 5;
    const double a = 0.5384693101056831 / 2.0;
    const double b = 0.9061798459386640 / 2.0;
    const double wa = 0.4786286704993665 / 2.0;
    const double wb = 0.2369268850561891 / 2.0;
    const double w0 = (128.0 / 225.0) / 2.0;
    q.nodes = {-b, -a, 0.0, a, b};
    q.weights = {wb, wa, w0, wa, wb};
    return q;
  }();
  return r;
}

}  // namespace hweno
