#pragma once

#include <vector>

namespace fracdg {

/// Nodes and weights of a quadrature rule on [0, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

enum class JacobiSide { left, right };

/// k-point Gauss-Legendre rule on [0,1]; exact for polynomials of degree
/// 2k-1. k must lie in [1, 64].
QuadRule gauss_legendre(int k);

/// k-point Gauss rule on [0,1] for the weight x^{-gamma} (side==left) or
/// (1-x)^{-gamma} (side==right), 0 < gamma < 1. The weights integrate the
/// singular factor: sum_i w_i p(x_i) = int_0^1 weight(x) p(x) dx exactly for
/// polynomials p of degree 2k-1.
QuadRule gauss_jacobi(int k, double gamma, JacobiSide side);

namespace detail {
/// General Gauss-Jacobi rule on [0,1] for weight (1-x)^a x^b, a, b > -1,
/// via the Golub-Welsch eigenvalue method. Used internally by the public
/// rules and by the seminorm estimator (which needs positive exponents).
QuadRule jacobi_rule(int k, double a, double b);
}  // namespace detail

}  // namespace fracdg
