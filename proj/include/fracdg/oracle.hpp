#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fracdg/fem1d.hpp"
#include "fracdg/mesh.hpp"
#include "fracdg/solver.hpp"

/// Independent reference implementations used to cross-check the production
/// code: series solutions of the single-mode problem, a spectral reference
/// solution, brute-force quadrature for the memory-kernel blocks, and a
/// fractional-seminorm estimator for stability diagnostics. Nothing here is
/// called by the solver itself.
namespace fracdg::oracle {

/// Adaptive bisection quadrature for smooth integrands (Gauss 15 vs 2x15
/// comparison). Throws on nonconvergence at max_depth.
double adaptive_quad(const RealFn& f, double a, double b, double abs_tol,
                     int max_depth = 40);

/// Fixed-panel Gauss quadrature with panels accumulating geometrically
/// toward one endpoint. Intended for bounded integrands whose derivatives
/// blow up algebraically there; `levels` dyadic panels resolve scale ratios
/// down to 2^-levels.
double split_quad(const RealFn& f, double a, double b, bool toward_a,
                  int levels = 60, int points = 20);

/// Truncated series solution of the single-mode problem
///   w' + lambda (kappa1 D^alpha + kappa2 D^beta) w = 0, w(0) = 1,
/// stored as exponent/coefficient pairs: w(t) = sum_i c_i t^{nu_i}.
struct ModeSolution {
  double lambda = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> exponents;
  std::vector<double> coefficients;  // narrowed copies, for inspection
  // The series is strongly alternating (intermediate terms can exceed 1e16
  // while the value stays O(1)), so the evaluators sum quad-precision
  // copies of the terms instead of the doubles above. The exponents must be
  // kept in quad precision as well: truncating nu ~ 1e2 to double perturbs
  // t^nu by ~1e-14 relative, which the cancellation amplifies.
  std::vector<__float128> exponents_hp;
  std::vector<__float128> coefficients_hp;
  int order = 0;           // truncation total order R
  double tail_bound = 0.0; // dropped-layer bound at the build horizon
  double roundoff_bound = 0.0;

  double value(double t) const;
  /// Term-by-term fractional integral (I^mu w)(t), mu > 0, by the power rule.
  double fractional_integral(double mu, double t) const;
  /// Residual of the integrated mode equation:
  ///   w(t) - 1 + lambda [kappa1 I^{1-alpha} + kappa2 I^{1-beta}] w(t).
  double equation_residual(double t) const;
};

/// Build the series, truncated so that the dropped tail at t = horizon is
/// below tol. Throws std::range_error when more than 400 orders would be
/// needed or quad-precision cancellation exceeds tol (the message carries
/// the achieved bound).
ModeSolution build_mode_solution(double lambda, double kappa1, double kappa2,
                                 double alpha, double beta, double horizon,
                                 double tol);

/// Convenience: w(t) for one parameter set.
double w_series(double lambda, double kappa1, double kappa2, double alpha,
                double beta, double t, double tol);

/// One-parameter Mittag-Leffler function E_nu(x) by direct series; intended
/// for small arguments (|x| <= ~2), nu in (0,1].
double mittag_leffler(double nu, double x);

/// One sine mode of the data: u0 = u0_amplitude sin(k pi x) and forcing
/// component f_k(t) sin(k pi x). forcing may be null. forcing_t0_exponent
/// e > 0 declares f_k ~ t^{-e} near 0 for the convolution quadrature.
struct SineMode {
  int k = 1;
  double u0_amplitude = 0.0;
  RealFn forcing;
  double forcing_t0_exponent = 0.0;
};

/// Reference solution for separable sine data by mode superposition:
///   u(x,t) = sum_k [u0_k w_k(t) + int_0^t w_k(t-s) f_k(s) ds] sin(k pi x),
/// the convolution by singularity-split adaptive quadrature.
class SpectralReference {
 public:
  SpectralReference(const ProblemSpec& problem, std::vector<SineMode> modes,
                    double tol);

  double mode_value(std::size_t idx, double t) const;
  double value(double x, double t) const;
  double value_dx(double x, double t) const;
  const ModeSolution& mode_series(std::size_t idx) const { return w_[idx]; }

 private:
  std::vector<SineMode> modes_;
  std::vector<ModeSolution> w_;
  double tol_;
};

/// I^{1-gamma}(phi_p chi_{I_i})(t) by quadrature only (exact Gauss-Jacobi
/// inside the source slab, geometric Gauss panels past it).
double brute_rl_integral(double gamma, const GradedMesh& mesh, int degree,
                         int i, int p, double t);

/// One memory-block entry by brute force, via integration by parts:
///   phi_q(1) F(t_j) - phi_q(0) F(t_{j-1}) - int_{I_j} phi_q' F dt
/// with F = brute_rl_integral. tol steers the panel sizes (floor ~1e-11).
double brute_force_kernel_entry(double gamma, const GradedMesh& mesh,
                                int degree, int j, int i, int q, int p,
                                double tol);

/// All (q,p) entries of one block at once (shares the F evaluations).
Eigen::MatrixXd brute_force_kernel_block(double gamma, const GradedMesh& mesh,
                                         int degree, int j, int i, double tol);

/// Scalar piecewise polynomial on the slabs of a graded mesh (one spatial
/// mode or dof path of a space-time solution).
struct PiecewisePolyPath {
  GradedMesh mesh;
  int degree = 0;
  Eigen::MatrixXd coeffs;  // num_slabs x (degree+1), slab-local basis

  double eval(double t) const;
  static PiecewisePolyPath from_solution(const SpaceTimeSolution& sol,
                                         int dof);
};

/// Squared-seminorm estimate of the zero-extension of the path:
///   |v|^2 ~ int int_(0,T)^2 (v(s)-v(u))^2 / |s-u|^{1+2*order} ds du
///         + (1/order) int v(s)^2 [ s^{-2*order} + (T-s)^{-2*order} ] ds,
/// returned as the square root. order in (0,1/2) u (1/2,1); paths with
/// jumps have a finite value only for order < 1/2. Diagnostic accuracy
/// ~1e-4 relative away from order = 1/2; J <= 32 enforced (O(J^2) panels).
double seminorm_estimate(double order, const PiecewisePolyPath& path);

}  // namespace fracdg::oracle
