#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace fracdg {

using RealFn = std::function<double(double)>;

/// Symmetric positive-definite matrix in lower banded storage:
/// data[d * size + i] holds A(i + d, i) for d = 0..bandwidth.
class BandedSpd {
 public:
  BandedSpd() = default;
  BandedSpd(int size, int bandwidth);

  int size() const { return size_; }
  int bandwidth() const { return bw_; }

  double& entry(int row, int col);
  double entry(int row, int col) const;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd dense() const;

  /// Banded Cholesky factor (lower). Throws if not positive definite.
  BandedSpd cholesky() const;
  /// Solve A x = rhs given that *this is the Cholesky factor of A.
  Eigen::VectorXd cholesky_solve(Eigen::VectorXd rhs) const;

 private:
  int size_ = 0;
  int bw_ = 0;
  std::vector<double> data_;
};

/// Conforming Lagrange elements of degree 1..3 on a uniform partition of
/// (0, 1), homogeneous Dirichlet conditions, nodes at the Gauss-Lobatto
/// points of each cell. Unknowns are the interior nodal values, numbered
/// left to right: dof_count() = cells * degree - 1.
class SpatialFem {
 public:
  SpatialFem(int cells, int degree);

  int cells() const { return cells_; }
  int degree() const { return degree_; }
  int dof_count() const { return ndof_; }
  double cell_width() const { return h_; }
  /// Coordinate of interior node k (0-based).
  double dof_coord(int k) const;

  const BandedSpd& mass() const { return mass_; }
  const BandedSpd& stiffness() const { return stiffness_; }
  Eigen::MatrixXd mass_dense() const { return mass_.dense(); }
  Eigen::MatrixXd stiffness_dense() const { return stiffness_.dense(); }

  Eigen::VectorXd apply_mass(const Eigen::VectorXd& x) const {
    return mass_.apply(x);
  }
  Eigen::VectorXd apply_stiffness(const Eigen::VectorXd& x) const {
    return stiffness_.apply(x);
  }

  /// (f, psi_l) for every interior shape function.
  Eigen::VectorXd load_vector(const RealFn& f, int quad_points = 0) const;

  /// Elliptic (energy) projection onto the mesh: coefficients z solving
  /// (z', psi') = (v', psi') for all interior psi. Takes the derivative of
  /// the projected function.
  Eigen::VectorXd ritz_project(const RealFn& v_dx, int quad_points = 0) const;

  /// Nodal interpolant of v (v must vanish at 0 and 1).
  Eigen::VectorXd interpolate(const RealFn& v) const;

  double evaluate(const Eigen::VectorXd& u, double x) const;
  /// || u_h - v ||_{L2(0,1)} by per-cell Gauss quadrature.
  double l2_error(const Eigen::VectorXd& u, const RealFn& v,
                  int quad_points = 0) const;
  /// || u_h ||_{L2} = sqrt(u^T M u), exact.
  double l2_norm(const Eigen::VectorXd& u) const;

 private:
  double shape_val(int local, double x) const;
  double shape_der(int local, double x) const;

  int cells_;
  int degree_;
  int ndof_;
  double h_;
  std::vector<double> ref_nodes_;
  BandedSpd mass_;
  BandedSpd stiffness_;
  BandedSpd stiffness_factor_;
};

}  // namespace fracdg
