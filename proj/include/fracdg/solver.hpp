#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "fracdg/basis.hpp"
#include "fracdg/fem1d.hpp"
#include "fracdg/mesh.hpp"

namespace fracdg {

using SpaceTimeFn = std::function<double(double, double)>;  // (x, t)

/// The initial-boundary value problem on (0,1) x (0,T]:
///   u_t - (kappa1 D^alpha + kappa2 D^beta) u_xx = f,
///   u(0,t) = u(1,t) = 0,  u(x,0) = u0(x),
/// with 0 < alpha < beta < 1 and D^gamma the order-gamma derivative taken
/// from t = 0. `exact` / `exact_dx` are optional references used by error
/// reporting; `u0` / `u0_dx` may be null for zero initial data.
struct ProblemSpec {
  double alpha = 0.0;
  double beta = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double T = 1.0;
  RealFn u0;
  RealFn u0_dx;
  SpaceTimeFn exact;
  SpaceTimeFn exact_dx;
};

/// Right-hand side f. Terms of the form coeff * t^exponent * profile(x) are
/// integrated exactly in time; anything else goes through `general` with
/// per-slab Gauss quadrature (a matched left-endpoint rule on the first slab
/// when `general_t0_exponent` flags an algebraic singularity f ~ t^{-e}).
struct Forcing {
  struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;  // > -1
    RealFn profile;
  };
  std::vector<PowerTerm> power_terms;
  SpaceTimeFn general;
  double general_t0_exponent = 0.0;  // 0 < e < 1 when singular, else 0
  int general_time_points = 0;       // 0 picks max(degree + 3, 8)
};

/// Coefficient matrix of the one-slab time bilinear form in the shifted
/// Legendre basis: entry(q, p) = int_0^1 phi_p' phi_q dx + phi_p(0) phi_q(0).
Eigen::MatrixXd time_stepping_matrix(const LegendreBasis& basis);

/// Solution of one space-time solve. coeffs[j-1] holds the (degree+1) x ndof
/// coefficient block of slab j; trace row j is the nodal-time value u_h(t_j^-)
/// (row 0 is the projected initial data).
struct SpaceTimeSolution {
  GradedMesh mesh;
  int degree = 0;
  std::vector<Eigen::MatrixXd> coeffs;
  Eigen::MatrixXd trace;
  /// Largest relative residual of the slab linear solves (diagnostic).
  double max_residual = 0.0;

  /// Spatial coefficient vector of u_h at time t (left limit at slab ends).
  Eigen::VectorXd at_time(double t) const;
};

/// Run the stepping scheme: on each slab solve
///   [C (x) M + sum_g kappa_g G^g_(jj) (x) A] U_j = b_j,
/// where b_j carries the forcing moments, the jump coupling to the previous
/// slab, and the memory sum over all earlier slabs.
SpaceTimeSolution solve(const ProblemSpec& problem, const Forcing& forcing,
                        const GradedMesh& mesh, int degree,
                        const SpatialFem& fem);

/// Problem with the reference solution u = t^r sin(pi x), zero initial data
/// (requires r > 0).
ProblemSpec manufactured_problem(double alpha, double beta, double kappa1,
                                 double kappa2, double T, double r);

/// Forcing that makes u = t^r sin(pi x) the exact solution of `p`:
///   f = sin(pi x) [ r t^{r-1}
///                   + pi^2 kappa1 c(alpha) t^{r-alpha}
///                   + pi^2 kappa2 c(beta) t^{r-beta} ],
/// c(g) = Gamma(r+1) / Gamma(r+1-g). All three terms are exact power terms.
Forcing manufactured_forcing(const ProblemSpec& p, double r);

}  // namespace fracdg
