#include "fracdg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdg/kernel.hpp"
#include "fracdg/quadrature.hpp"
#include "fracdg/special.hpp"

namespace fracdg {

Eigen::MatrixXd time_stepping_matrix(const LegendreBasis& basis) {
  const int m = basis.degree();
  Eigen::MatrixXd c(m + 1, m + 1);
  for (int p = 0; p <= m; ++p) {
    const auto& cp = basis.monomial_expansion(p);
    for (int q = 0; q <= m; ++q) {
      const auto& cq = basis.monomial_expansion(q);
      double v = 0.0;
      for (int k = 1; k < static_cast<int>(cp.size()); ++k) {
        for (int l = 0; l < static_cast<int>(cq.size()); ++l) {
          v += cp[k] * k * cq[l] / (k + l);
        }
      }
      c(q, p) = v + basis.eval(p, 0.0) * basis.eval(q, 0.0);
    }
  }
  return c;
}

Eigen::VectorXd SpaceTimeSolution::at_time(double t) const {
  const int J = mesh.num_slabs();
  if (t < mesh.node(0) - 1e-14 || t > mesh.node(J) * (1.0 + 1e-14)) {
    throw std::invalid_argument("SpaceTimeSolution::at_time outside span");
  }
  if (t <= mesh.node(0)) return trace.row(0);
  int j = 1;
  while (j < J && t > mesh.node(j)) ++j;
  const double xr = (t - mesh.node(j - 1)) / mesh.width(j);
  const LegendreBasis basis(degree);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(trace.cols());
  for (int p = 0; p <= degree; ++p) {
    out += basis.eval(p, std::min(xr, 1.0)) * coeffs[j - 1].row(p).transpose();
  }
  return out;
}

namespace {

void validate(const ProblemSpec& pr, const GradedMesh& mesh, int degree) {
  if (!(pr.alpha > 0.0 && pr.alpha < 1.0 && pr.beta > 0.0 && pr.beta < 1.0 &&
        pr.alpha <= pr.beta)) {
    throw std::invalid_argument("solve: need 0 < alpha <= beta < 1");
  }
  if (pr.kappa1 < 0.0 || pr.kappa2 < 0.0 || pr.kappa1 + pr.kappa2 <= 0.0) {
    throw std::invalid_argument("solve: diffusivities must be >= 0, not both 0");
  }
  if (std::abs(mesh.T - pr.T) > 1e-12 * pr.T) {
    throw std::invalid_argument("solve: mesh horizon differs from problem T");
  }
  if (degree < 0 || degree > LegendreBasis::kMaxDegree) {
    throw std::invalid_argument("solve: unsupported temporal degree");
  }
  if (!(mesh.width(1) > 0.0)) {
    throw std::invalid_argument(
        "solve: first slab width underflowed (grading too strong for J)");
  }
}

}  // namespace

SpaceTimeSolution solve(const ProblemSpec& problem, const Forcing& forcing,
                        const GradedMesh& mesh, int degree,
                        const SpatialFem& fem) {
  validate(problem, mesh, degree);
  const int J = mesh.num_slabs();
  const int m = degree;
  const int ndof = fem.dof_count();
  const int sz = (m + 1) * ndof;
  const LegendreBasis basis(m);
  const Eigen::MatrixXd ctime = time_stepping_matrix(basis);
  const Eigen::MatrixXd mass = fem.mass_dense();
  const Eigen::MatrixXd stiff = fem.stiffness_dense();
  const bool use_alpha = problem.kappa1 > 0.0;
  const bool use_beta = problem.kappa2 > 0.0;

  // Spatial load vector of every exact power term, reused across slabs.
  std::vector<Eigen::VectorXd> term_loads;
  term_loads.reserve(forcing.power_terms.size());
  for (const auto& term : forcing.power_terms) {
    if (!(term.exponent > -1.0)) {
      throw std::invalid_argument("solve: power term exponent <= -1");
    }
    term_loads.push_back(fem.load_vector(term.profile));
  }

  Eigen::VectorXd phi0(m + 1);
  for (int q = 0; q <= m; ++q) phi0[q] = basis.eval(q, 0.0);

  SpaceTimeSolution sol;
  sol.mesh = mesh;
  sol.degree = m;
  sol.coeffs.resize(J);
  sol.trace = Eigen::MatrixXd::Zero(J + 1, ndof);

  Eigen::VectorXd uprev;
  if (problem.u0_dx) {
    uprev = fem.ritz_project(problem.u0_dx);
  } else if (problem.u0) {
    uprev = fem.interpolate(problem.u0);
  } else {
    uprev = Eigen::VectorXd::Zero(ndof);
  }
  sol.trace.row(0) = uprev;

  std::vector<Eigen::MatrixXd> au(J);  // au[i-1].row(p) = (A u_{i,p})^T

  Eigen::MatrixXd kmat(sz, sz);
  Eigen::MatrixXd rhs(m + 1, ndof);
  for (int j = 1; j <= J; ++j) {
    const double t_lo = mesh.node(j - 1);
    const double t_hi = mesh.node(j);
    const double tau = t_hi - t_lo;

    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(m + 1, m + 1);
    if (use_alpha) {
      coupling += problem.kappa1 *
                  history_block(problem.alpha, mesh, basis, j, j).entries;
    }
    if (use_beta) {
      coupling += problem.kappa2 *
                  history_block(problem.beta, mesh, basis, j, j).entries;
    }
    for (int q = 0; q <= m; ++q) {
      for (int p = 0; p <= m; ++p) {
        kmat.block(q * ndof, p * ndof, ndof, ndof) =
            ctime(q, p) * mass + coupling(q, p) * stiff;
      }
    }

    rhs.setZero();
    // Exact time moments of the power-law part of f.
    for (std::size_t k = 0; k < forcing.power_terms.size(); ++k) {
      const auto& term = forcing.power_terms[k];
      for (int q = 0; q <= m; ++q) {
        const double mom =
            power_moment(basis, q, t_lo, t_hi, 0.0, term.exponent);
        rhs.row(q) += term.coeff * mom * term_loads[k].transpose();
      }
    }
    // Quadrature for the general part.
    if (forcing.general) {
      const int kt = forcing.general_time_points > 0
                         ? forcing.general_time_points
                         : std::max(m + 3, 8);
      const bool matched = j == 1 && forcing.general_t0_exponent > 0.0;
      const QuadRule rule =
          matched ? gauss_jacobi(kt, forcing.general_t0_exponent,
                                 JacobiSide::left)
                  : gauss_legendre(kt);
      for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
        const double xr = rule.nodes[g];
        const double t = t_lo + tau * xr;
        double wt = tau * rule.weights[g];
        if (matched) wt *= std::pow(xr, forcing.general_t0_exponent);
        const Eigen::VectorXd lv = fem.load_vector(
            [&](double x) { return forcing.general(x, t); });
        for (int q = 0; q <= m; ++q) {
          rhs.row(q) += wt * basis.eval(q, xr) * lv.transpose();
        }
      }
    }
    // Upwind coupling to the previous slab end.
    const Eigen::VectorXd mu_prev = fem.apply_mass(uprev);
    for (int q = 0; q <= m; ++q) rhs.row(q) += phi0[q] * mu_prev.transpose();
    // Memory: subtract the history of all earlier slabs.
    for (int i = 1; i < j; ++i) {
      Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(m + 1, m + 1);
      if (use_alpha) {
        coef += problem.kappa1 *
                history_block(problem.alpha, mesh, basis, j, i).entries;
      }
      if (use_beta) {
        coef += problem.kappa2 *
                history_block(problem.beta, mesh, basis, j, i).entries;
      }
      rhs.noalias() -= coef * au[i - 1];
    }

    Eigen::VectorXd bv(sz);
    for (int q = 0; q <= m; ++q) bv.segment(q * ndof, ndof) = rhs.row(q);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(kmat);
    const Eigen::VectorXd x = lu.solve(bv);
    const double bnorm = bv.norm();
    if (bnorm > 0.0) {
      sol.max_residual =
          std::max(sol.max_residual, (kmat * x - bv).norm() / bnorm);
    }

    Eigen::MatrixXd& u = sol.coeffs[j - 1];
    u.resize(m + 1, ndof);
    for (int q = 0; q <= m; ++q) u.row(q) = x.segment(q * ndof, ndof);
    au[j - 1].resize(m + 1, ndof);
    for (int p = 0; p <= m; ++p) {
      au[j - 1].row(p) = fem.apply_stiffness(u.row(p).transpose());
    }
    uprev = u.colwise().sum();  // every basis function is 1 at the slab end
    sol.trace.row(j) = uprev;
  }
  return sol;
}

ProblemSpec manufactured_problem(double alpha, double beta, double kappa1,
                                 double kappa2, double T, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("manufactured_problem: r <= 0");
  ProblemSpec p;
  p.alpha = alpha;
  p.beta = beta;
  p.kappa1 = kappa1;
  p.kappa2 = kappa2;
  p.T = T;
  p.exact = [r](double x, double t) {
    return std::pow(t, r) * std::sin(M_PI * x);
  };
  p.exact_dx = [r](double x, double t) {
    return std::pow(t, r) * M_PI * std::cos(M_PI * x);
  };
  return p;
}

Forcing manufactured_forcing(const ProblemSpec& p, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("manufactured_forcing: r <= 0");
  const RealFn profile = [](double x) { return std::sin(M_PI * x); };
  const double pi2 = M_PI * M_PI;
  Forcing f;
  f.power_terms.push_back({r, r - 1.0, profile});
  f.power_terms.push_back(
      {pi2 * p.kappa1 * gamma_fn(r + 1.0) / gamma_fn(r + 1.0 - p.alpha),
       r - p.alpha, profile});
  f.power_terms.push_back(
      {pi2 * p.kappa2 * gamma_fn(r + 1.0) / gamma_fn(r + 1.0 - p.beta),
       r - p.beta, profile});
  return f;
}

}  // namespace fracdg
