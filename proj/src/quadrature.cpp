#include "fracdg/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "fracdg/special.hpp"

namespace fracdg {

namespace detail {

QuadRule jacobi_rule(int k, double a, double b) {
  if (k < 1 || k > 64) throw std::invalid_argument("jacobi_rule: k out of [1, 64]");
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("jacobi_rule: exponents must be > -1");
  // Three-term recurrence for monic Jacobi polynomials on [-1, 1] with
  // weight (1-x)^a (1+x)^b.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
  const double apb = a + b;
  for (int n = 0; n < k; ++n) {
    double alpha;
    if (n == 0) {
      alpha = (b - a) / (apb + 2.0);
    } else {
      const double den = (2.0 * n + apb) * (2.0 * n + apb + 2.0);
      alpha = (b * b - a * a) / den;
    }
    T(n, n) = alpha;
    if (n + 1 < k) {
      const int m = n + 1;
      double beta;
      if (m == 1) {
        beta = 4.0 * (1.0 + a) * (1.0 + b) /
               ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
      } else {
        const double t = 2.0 * m + apb;
        beta = 4.0 * m * (m + a) * (m + b) * (m + apb) /
               (t * t * (t + 1.0) * (t - 1.0));
      }
      T(n, n + 1) = T(n + 1, n) = std::sqrt(beta);
    }
  }
  const double mu0 = std::pow(2.0, apb + 1.0) *
                     std::exp(lgamma_fn(a + 1.0) + lgamma_fn(b + 1.0) -
                              lgamma_fn(apb + 2.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("jacobi_rule: eigen decomposition failed");
  QuadRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  // Map [-1,1] -> [0,1]; the weight transforms as
  // (1-x)^a (1+x)^b dx  ->  2^{a+b+1} (1-u)^a u^b du.
  const double wscale = 1.0 / std::pow(2.0, apb + 1.0);
  for (int i = 0; i < k; ++i) {
    rule.nodes[i] = 0.5 * (es.eigenvalues()(i) + 1.0);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0 * wscale;
  }
  return rule;
}

}  // namespace detail

QuadRule gauss_legendre(int k) {
  if (k < 1 || k > 64)
    throw std::invalid_argument("gauss_legendre: k out of [1, 64]");
  return detail::jacobi_rule(k, 0.0, 0.0);
}

QuadRule gauss_jacobi(int k, double gamma, JacobiSide side) {
  if (k < 1 || k > 64)
    throw std::invalid_argument("gauss_jacobi: k out of [1, 64]");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gauss_jacobi: gamma out of (0, 1)");
  // weight x^{-gamma}: exponent b = -gamma at the left end of [0,1];
  // weight (1-x)^{-gamma}: exponent a = -gamma at the right end.
  return side == JacobiSide::left ? detail::jacobi_rule(k, 0.0, -gamma)
                                  : detail::jacobi_rule(k, -gamma, 0.0);
}

}  // namespace fracdg
