#include "fracdg/fem1d.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdg/quadrature.hpp"

namespace fracdg {

BandedSpd::BandedSpd(int size, int bandwidth)
    : size_(size), bw_(bandwidth),
      data_(static_cast<std::size_t>(size) * (bandwidth + 1), 0.0) {
  if (size < 1 || bandwidth < 0 || bandwidth >= size) {
    throw std::invalid_argument("BandedSpd: bad shape");
  }
}

double& BandedSpd::entry(int row, int col) {
  if (row < col) std::swap(row, col);
  if (col < 0 || row >= size_ || row - col > bw_) {
    throw std::out_of_range("BandedSpd::entry outside band");
  }
  return data_[static_cast<std::size_t>(row - col) * size_ + col];
}

double BandedSpd::entry(int row, int col) const {
  if (row < col) std::swap(row, col);
  if (col < 0 || row >= size_) throw std::out_of_range("BandedSpd::entry");
  if (row - col > bw_) return 0.0;
  return data_[static_cast<std::size_t>(row - col) * size_ + col];
}

Eigen::VectorXd BandedSpd::apply(const Eigen::VectorXd& x) const {
  if (x.size() != size_) throw std::invalid_argument("BandedSpd::apply size");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(size_);
  for (int col = 0; col < size_; ++col) {
    y[col] += data_[col] * x[col];
    const int dmax = std::min(bw_, size_ - 1 - col);
    for (int d = 1; d <= dmax; ++d) {
      const double a = data_[static_cast<std::size_t>(d) * size_ + col];
      y[col + d] += a * x[col];
      y[col] += a * x[col + d];
    }
  }
  return y;
}

Eigen::MatrixXd BandedSpd::dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size_, size_);
  for (int col = 0; col < size_; ++col) {
    const int dmax = std::min(bw_, size_ - 1 - col);
    for (int d = 0; d <= dmax; ++d) {
      const double a = data_[static_cast<std::size_t>(d) * size_ + col];
      out(col + d, col) = a;
      out(col, col + d) = a;
    }
  }
  return out;
}

BandedSpd BandedSpd::cholesky() const {
  BandedSpd l = *this;
  for (int j = 0; j < size_; ++j) {
    double diag = l.data_[j];
    for (int k = std::max(0, j - bw_); k < j; ++k) {
      const double ljk = l.data_[static_cast<std::size_t>(j - k) * size_ + k];
      diag -= ljk * ljk;
    }
    if (!(diag > 0.0)) throw std::runtime_error("BandedSpd: not SPD");
    diag = std::sqrt(diag);
    l.data_[j] = diag;
    const int imax = std::min(size_ - 1, j + bw_);
    for (int i = j + 1; i <= imax; ++i) {
      double v = l.data_[static_cast<std::size_t>(i - j) * size_ + j];
      for (int k = std::max(0, i - bw_); k < j; ++k) {
        v -= l.data_[static_cast<std::size_t>(i - k) * size_ + k] *
             l.data_[static_cast<std::size_t>(j - k) * size_ + k];
      }
      l.data_[static_cast<std::size_t>(i - j) * size_ + j] = v / diag;
    }
  }
  return l;
}

Eigen::VectorXd BandedSpd::cholesky_solve(Eigen::VectorXd rhs) const {
  if (rhs.size() != size_) {
    throw std::invalid_argument("BandedSpd::cholesky_solve size");
  }
  // L y = rhs
  for (int i = 0; i < size_; ++i) {
    double v = rhs[i];
    for (int k = std::max(0, i - bw_); k < i; ++k) {
      v -= data_[static_cast<std::size_t>(i - k) * size_ + k] * rhs[k];
    }
    rhs[i] = v / data_[i];
  }
  // L^T x = y
  for (int i = size_ - 1; i >= 0; --i) {
    double v = rhs[i];
    const int kmax = std::min(size_ - 1, i + bw_);
    for (int k = i + 1; k <= kmax; ++k) {
      v -= data_[static_cast<std::size_t>(k - i) * size_ + i] * rhs[k];
    }
    rhs[i] = v / data_[i];
  }
  return rhs;
}

namespace {

std::vector<double> lobatto_nodes(int degree) {
  switch (degree) {
    case 1:
      return {0.0, 1.0};
    case 2:
      return {0.0, 0.5, 1.0};
    case 3: {
      const double s = 1.0 / std::sqrt(5.0);
      return {0.0, 0.5 * (1.0 - s), 0.5 * (1.0 + s), 1.0};
    }
    default:
      throw std::invalid_argument("SpatialFem: degree must be 1, 2 or 3");
  }
}

}  // namespace

SpatialFem::SpatialFem(int cells, int degree)
    : cells_(cells), degree_(degree), ndof_(cells * degree - 1),
      h_(1.0 / cells), ref_nodes_(lobatto_nodes(degree)) {
  if (cells < 2) throw std::invalid_argument("SpatialFem: need >= 2 cells");
  const int bw = std::min(degree_, ndof_ - 1);
  mass_ = BandedSpd(ndof_, bw);
  stiffness_ = BandedSpd(ndof_, bw);

  // Local matrices on the reference cell, degree-exact Gauss.
  const int nl = degree_ + 1;
  const QuadRule rule = gauss_legendre(degree_ + 1);
  Eigen::MatrixXd mloc = Eigen::MatrixXd::Zero(nl, nl);
  Eigen::MatrixXd aloc = Eigen::MatrixXd::Zero(nl, nl);
  for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
    const double x = rule.nodes[g];
    const double w = rule.weights[g];
    for (int a = 0; a < nl; ++a) {
      for (int b = 0; b <= a; ++b) {
        mloc(a, b) += w * shape_val(a, x) * shape_val(b, x);
        aloc(a, b) += w * shape_der(a, x) * shape_der(b, x);
      }
    }
  }
  for (int c = 0; c < cells_; ++c) {
    for (int a = 0; a < nl; ++a) {
      const int ga = c * degree_ + a - 1;  // interior numbering
      if (ga < 0 || ga >= ndof_) continue;
      for (int b = 0; b <= a; ++b) {
        const int gb = c * degree_ + b - 1;
        if (gb < 0 || gb >= ndof_) continue;
        mass_.entry(ga, gb) += h_ * mloc(a, b);
        stiffness_.entry(ga, gb) += aloc(a, b) / h_;
      }
    }
  }
  stiffness_factor_ = stiffness_.cholesky();
}

double SpatialFem::dof_coord(int k) const {
  if (k < 0 || k >= ndof_) throw std::out_of_range("SpatialFem::dof_coord");
  const int g = k + 1;
  const int c = g / degree_;
  const int l = g % degree_;
  return (c + ref_nodes_[l]) * h_;
}

double SpatialFem::shape_val(int local, double x) const {
  double v = 1.0;
  for (int j = 0; j <= degree_; ++j) {
    if (j == local) continue;
    v *= (x - ref_nodes_[j]) / (ref_nodes_[local] - ref_nodes_[j]);
  }
  return v;
}

double SpatialFem::shape_der(int local, double x) const {
  double s = 0.0;
  for (int k = 0; k <= degree_; ++k) {
    if (k == local) continue;
    double v = 1.0 / (ref_nodes_[local] - ref_nodes_[k]);
    for (int j = 0; j <= degree_; ++j) {
      if (j == local || j == k) continue;
      v *= (x - ref_nodes_[j]) / (ref_nodes_[local] - ref_nodes_[j]);
    }
    s += v;
  }
  return s;
}

Eigen::VectorXd SpatialFem::load_vector(const RealFn& f,
                                        int quad_points) const {
  const int k = quad_points > 0 ? quad_points : degree_ + 5;
  const QuadRule rule = gauss_legendre(k);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(ndof_);
  for (int c = 0; c < cells_; ++c) {
    const double x0 = c * h_;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double xr = rule.nodes[g];
      const double w = h_ * rule.weights[g] * f(x0 + h_ * xr);
      for (int a = 0; a <= degree_; ++a) {
        const int ga = c * degree_ + a - 1;
        if (ga < 0 || ga >= ndof_) continue;
        out[ga] += w * shape_val(a, xr);
      }
    }
  }
  return out;
}

Eigen::VectorXd SpatialFem::ritz_project(const RealFn& v_dx,
                                         int quad_points) const {
  const int k = quad_points > 0 ? quad_points : degree_ + 5;
  const QuadRule rule = gauss_legendre(k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ndof_);
  for (int c = 0; c < cells_; ++c) {
    const double x0 = c * h_;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double xr = rule.nodes[g];
      // (v', psi'): the 1/h of the global derivative cancels the h of dx.
      const double w = rule.weights[g] * v_dx(x0 + h_ * xr);
      for (int a = 0; a <= degree_; ++a) {
        const int ga = c * degree_ + a - 1;
        if (ga < 0 || ga >= ndof_) continue;
        rhs[ga] += w * shape_der(a, xr);
      }
    }
  }
  return stiffness_factor_.cholesky_solve(std::move(rhs));
}

Eigen::VectorXd SpatialFem::interpolate(const RealFn& v) const {
  Eigen::VectorXd out(ndof_);
  for (int k = 0; k < ndof_; ++k) out[k] = v(dof_coord(k));
  return out;
}

double SpatialFem::evaluate(const Eigen::VectorXd& u, double x) const {
  if (u.size() != ndof_) throw std::invalid_argument("SpatialFem::evaluate");
  int c = static_cast<int>(x / h_);
  c = std::max(0, std::min(cells_ - 1, c));
  const double xr = x / h_ - c;
  double s = 0.0;
  for (int a = 0; a <= degree_; ++a) {
    const int ga = c * degree_ + a - 1;
    if (ga < 0 || ga >= ndof_) continue;
    s += u[ga] * shape_val(a, xr);
  }
  return s;
}

double SpatialFem::l2_error(const Eigen::VectorXd& u, const RealFn& v,
                            int quad_points) const {
  if (u.size() != ndof_) throw std::invalid_argument("SpatialFem::l2_error");
  const int k = quad_points > 0 ? quad_points : degree_ + 6;
  const QuadRule rule = gauss_legendre(k);
  double acc = 0.0;
  for (int c = 0; c < cells_; ++c) {
    const double x0 = c * h_;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double xr = rule.nodes[g];
      double uh = 0.0;
      for (int a = 0; a <= degree_; ++a) {
        const int ga = c * degree_ + a - 1;
        if (ga < 0 || ga >= ndof_) continue;
        uh += u[ga] * shape_val(a, xr);
      }
      const double d = uh - v(x0 + h_ * xr);
      acc += h_ * rule.weights[g] * d * d;
    }
  }
  return std::sqrt(acc);
}

double SpatialFem::l2_norm(const Eigen::VectorXd& u) const {
  return std::sqrt(u.dot(mass_.apply(u)));
}

}  // namespace fracdg
