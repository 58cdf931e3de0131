#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "fracdg/basis.hpp"
#include "fracdg/mesh.hpp"

namespace fracdg {

/// Coupling block of the memory operator between target slab j and source
/// slab i (1-based, i <= j):
///   entries(q, p) = int_{I_j} phi_q^{(j)}(t) *
///                   (D^gamma applied to phi_p^{(i)} extended by zero)(t) dt
/// where D^gamma = d/dt I^{1-gamma} is the order-gamma derivative taken from
/// t = 0 and phi's are the shifted Legendre slab polynomials. The jump of the
/// zero-extended source polynomial at t_{i-1} is part of the derivative
/// (power rule with the cut included).
struct HistoryBlock {
  int j = 0;
  int i = 0;
  double gamma = 0.0;
  Eigen::MatrixXd entries;
};

/// Moment of a target-slab test polynomial against a shifted power:
///   int_{I_j} phi_q((t - t_{j-1}) / tau_j) (t - c)^mu dt,
/// for a cut point c <= t_{j-1} and mu > -1. Evaluated exactly (machine
/// precision) by one of three regimes depending on the distance
/// D = t_{j-1} - c: D = 0 closed form, D < 2 tau_j shifted-monomial closed
/// form, D >= 2 tau_j binomial series in tau_j / D <= 1/2.
double power_moment(const LegendreBasis& basis, int q, double t_lo,
                    double t_hi, double c, double mu);

/// Compute one history block. Requires 0 < gamma < 1, 1 <= i <= j <= J,
/// basis degree <= 4.
HistoryBlock history_block(double gamma, const GradedMesh& mesh,
                           const LegendreBasis& basis, int j, int i);

/// Fractional integral of a single zero-extended slab polynomial:
///   (I^{1-gamma} phi_p^{(i)} chi_{I_i})(t)
/// for t >= t_{i-1}, via the incomplete-beta closed form
///   int_{t_{i-1}}^{min(t, t_i)} (t-s)^{-gamma} ((s-t_{i-1})/tau_i)^k ds
///     = tau_i^{1-gamma} x^{k+1-gamma} B_{min(1,x)/x}(k+1, 1-gamma),
/// x = (t - t_{i-1}) / tau_i.
double rl_integral_of_slab_poly(double gamma, const GradedMesh& mesh,
                                const LegendreBasis& basis, int i, int p,
                                double t);

/// Order-gamma derivative of t^r taken from zero:
/// D^gamma t^r = Gamma(r+1) / Gamma(r+1-gamma) * t^{r-gamma}, r > -1+gamma.
double rl_derivative_of_power(double gamma, double r, double t);

/// Lazily computed, cached history blocks for one (mesh, gamma, degree)
/// triple. Single-threaded use; one instance per solve.
class HistoryAssembler {
 public:
  HistoryAssembler(double gamma, const GradedMesh& mesh, int degree);

  const Eigen::MatrixXd& block(int j, int i);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
  const GradedMesh& mesh_;
  LegendreBasis basis_;
  std::map<std::pair<int, int>, Eigen::MatrixXd> cache_;
};

}  // namespace fracdg
